#include <string>

#include "ellipconv/certify.hpp"
#include "ellipconv/errors.hpp"

namespace ellipconv::certify {

using family::LogShiftParam;
using family::PowerParam;

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "thm1-convex",     "thm1-concave",   "thm2-convex",  "thm2-concave",  "thm3-logconcave",
      "thm3-logconvex",  "cor14-convex",   "cor14-concave", "cor15-monotone"};
  return ids;
}

ScanConfig theorem_scan_config() {
  ScanConfig cfg;
  cfg.tail_points = 64;
  return cfg;
}

TheoremCertificate certify_theorem(std::string_view id, double param, const ScanConfig& cfg) {
  TheoremCertificate out{std::string(id), param, {}, {}, std::nullopt};
  const LogShiftParam a{param};
  const PowerParam p{param};

  auto sign = [&](std::string claim, ScalarFn fn, Sign s) {
    out.claim = std::move(claim);
    out.certificate = certify_sign(fn, s, cfg);
    return out;
  };

  if (id == "thm1-convex") {
    return sign("g_a >= 0", [a](const UnitArg& x) { return family::g_factor(a, x); },
                Sign::nonnegative);
  }
  if (id == "thm1-concave") {
    return sign("g_a <= 0", [a](const UnitArg& x) { return family::g_factor(a, x); },
                Sign::nonpositive);
  }
  if (id == "thm2-convex") {
    return sign("phi - a >= 0",
                [a](const UnitArg& x) { return family::recip_f_second_sign(a, x); },
                Sign::nonnegative);
  }
  if (id == "thm2-concave") {
    return sign("phi - a <= 0",
                [a](const UnitArg& x) { return family::recip_f_second_sign(a, x); },
                Sign::nonpositive);
  }
  if (id == "thm3-logconcave") {
    return sign("p + G >= 0",
                [p](const UnitArg& x) { return family::log_h_second_factor(p, x); },
                Sign::nonnegative);
  }
  if (id == "thm3-logconvex") {
    return sign("p + G <= 0",
                [p](const UnitArg& x) { return family::log_h_second_factor(p, x); },
                Sign::nonpositive);
  }
  if (id == "cor14-convex") {
    return sign("J_p >= 0", [p](const UnitArg& x) { return family::j_factor(p, x); },
                Sign::nonnegative);
  }
  if (id == "cor14-concave") {
    return sign("J_p <= 0", [p](const UnitArg& x) { return family::j_factor(p, x); },
                Sign::nonpositive);
  }
  if (id == "cor15-monotone") {
    auto l = [p](const UnitArg& x) { return family::l_factor(p, x); };
    if (param >= 0.25) return sign("L_p <= 0 (h_p decreasing)", l, Sign::nonpositive);
    if (param <= 0.0) return sign("L_p >= 0 (h_p increasing)", l, Sign::nonnegative);
    const auto tp = find_x_p(p);
    out.turning_point = tp;
    const UnitArg x_p = tp.x;
    return sign("L_p >= 0 before x_p, <= 0 after (h_p unimodal)",
                [p, x_p](const UnitArg& x) {
                  const double v = family::l_factor(p, x);
                  return x < x_p ? v : -v;
                },
                Sign::nonnegative);
  }
  throw DomainError("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace ellipconv::certify
