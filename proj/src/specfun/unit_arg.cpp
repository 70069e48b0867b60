#include "ellipconv/unit_arg.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ellipconv/errors.hpp"

namespace ellipconv {
namespace {

constexpr double kMinNormal = std::numeric_limits<double>::min();
// Below this complement the kernel switches to the theta expansion.
constexpr double kDeepTail = 1e-24;

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("cannot parse '" + std::string(text) + "' as a number");
  }
  return v;
}

}  // namespace

UnitArg::UnitArg(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("argument " + format17(x) + " outside the open unit interval");
  }
  *this = x < 0.5 ? anchored_small(x) : anchored_complement(1.0 - x);
}

UnitArg UnitArg::anchored_small(double x) {
  return UnitArg(x, 1.0 - x, -0.5 * std::log1p(-x));
}

UnitArg UnitArg::anchored_complement(double t) {
  return UnitArg(1.0 - t, t, -0.5 * std::log(t));
}

UnitArg UnitArg::from_complement(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("complement " + format17(t) + " outside the open unit interval");
  }
  if (t > 0.5) return anchored_small(1.0 - t);
  if (t < kMinNormal) return from_log_complement(-0.5 * std::log(t));
  return anchored_complement(t);
}

UnitArg UnitArg::from_logit(double z) {
  if (std::isnan(z)) throw DomainError("logit is NaN");
  if (z < 0.0) {
    const double ez = std::exp(z);
    return UnitArg(ez / (1.0 + ez));
  }
  const double emz = std::exp(-z);
  const double t = emz / (1.0 + emz);
  if (t >= kMinNormal) return anchored_complement(t);
  return from_log_complement(0.5 * (z + std::log1p(emz)));
}

UnitArg UnitArg::from_log_complement(double theta) {
  if (!(theta > 0.0) || std::isinf(theta)) {
    throw DomainError("log-complement " + format17(theta) + " must be positive and finite");
  }
  const double t = std::exp(-2.0 * theta);
  if (t > 0.5) return anchored_small(-std::expm1(-2.0 * theta));
  if (t >= kMinNormal) return anchored_complement(t);
  return UnitArg(1.0, t, theta);
}

double UnitArg::logit() const noexcept { return std::log(x_) + 2.0 * theta_; }

UnitArg UnitArg::swapped() const {
  if (xc_ < kMinNormal) {
    throw DomainError("cannot swap a point closer to 1 than the smallest normal double");
  }
  return x_ < 0.5 ? anchored_complement(x_) : anchored_small(xc_);
}

bool UnitArg::deep_tail() const noexcept { return xc_ < kDeepTail; }

std::string UnitArg::to_string() const {
  if (xc_ < kMinNormal) return "tail:" + format17(theta_);
  if (x_ < 0.5 || 1.0 - x_ == xc_) return format17(x_);
  return "1-" + format17(xc_);
}

UnitArg UnitArg::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("tail:")) {
    return from_log_complement(parse_double(text.substr(5)));
  }
  if (text.starts_with("1-")) return from_complement(parse_double(text.substr(2)));
  return UnitArg(parse_double(text));
}

UnitArg midpoint(const UnitArg& a, const UnitArg& b) {
  if (a.x() < 0.5 || b.x() < 0.5) return UnitArg(0.5 * (a.x() + b.x()));
  if (a.complement() >= kMinNormal && b.complement() >= kMinNormal) {
    return UnitArg::from_complement(0.5 * (a.complement() + b.complement()));
  }
  return UnitArg::from_log_complement(0.5 * (a.theta() + b.theta()));
}

}  // namespace ellipconv
