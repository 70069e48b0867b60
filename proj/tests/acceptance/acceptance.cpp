// Runs the nine acceptance criteria and prints one verdict line for each.
// Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ellipconv/certify.hpp"
#include "ellipconv/cli.hpp"
#include "ellipconv/constants.hpp"
#include "ellipconv/family.hpp"
#include "ellipconv/inequalities.hpp"
#include "ellipconv/specfun.hpp"
#include "pinned.hpp"
#include "reference_values.hpp"

using namespace ellipconv;
using certify::Direction;
using certify::ScanConfig;
using certify::Sign;
using std::numbers::pi;

namespace {

// Collects failed sub-checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + ("failed: " + f);
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ScanConfig grid(int n = 10000) {
  ScanConfig cfg;
  cfg.n = n;
  return cfg;
}

bool verified(const certify::ScalarFn& fn, Sign s, const ScanConfig& cfg) {
  return certify::certify_sign(fn, s, cfg).verified();
}

bool refuted(const certify::ScalarFn& fn, Sign s, const ScanConfig& cfg) {
  const auto c = certify::certify_sign(fn, s, cfg);
  return c.verdict == certify::Verdict::mixed && c.witness_x.has_value();
}

bool monotone(const certify::ScalarFn& fn, Direction d, const ScanConfig& cfg = grid()) {
  return certify::certify_monotone(fn, d, cfg).verified();
}

// Points used for limits: 1e-9 from 0, and theta = 1e7 from 1.
const UnitArg near_zero(1e-9);
const UnitArg near_one = UnitArg::from_log_complement(1e7);

// --- 1 ---------------------------------------------------------------------
void a_c_reproduction(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = certify::find_a_c();
  const double secs = seconds_since(t0);
  const auto doubled = certify::find_a_c(grid(20000));
  c.expect(std::abs(r.value - 1.4622) <= 5e-4, "a_c within 5e-4 of 1.4622");
  c.expect(secs < 5.0, "runtime < 5 s");
  c.expect(std::abs(doubled.value - r.value) <= 1e-8, "grid-doubling stability 1e-8");
  c.note(fmt("a_c=%.12f", r.value) + fmt(" x*=%.10f", r.x_star.x()) +
         fmt(" |a_c-1.4622|=%.2e", std::abs(r.value - 1.4622)) +
         fmt(" doubling diff=%.1e", std::abs(doubled.value - r.value)) + fmt(" t=%.3fs", secs));
}

// --- 2 ---------------------------------------------------------------------
void kernel_accuracy(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const double g = constants::gamma_three_quarters;
  const double k_half_err = rel(specfun::ellip_k(0.5), pi * std::sqrt(pi) / (2 * g * g));
  c.expect(k_half_err <= 1e-12, "K(1/2) closed form 1e-12");
  double cross = 0.0;
  const double lo = std::log(1e-6), hi = std::log(0.95);
  for (int i = 1; i <= 200; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / 201.0);
    const double k = specfun::ellip_k(x);
    cross = std::max(cross, std::abs(k - pi / 2 * specfun::hyp2f1({0.5, 0.5, 1.0}, x)) / k);
  }
  c.expect(cross <= 1e-12, "AGM vs series 1e-12 at 200 points");
  double leg = 0.0;
  for (int i = 1; i <= 100; ++i) {
    leg = std::max(leg, std::abs(specfun::legendre_residual(UnitArg(i / 101.0))));
  }
  c.expect(leg <= 1e-12, "Legendre residual 1e-12 at 100 points");
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime < 1 s");
  c.note(fmt("K(1/2) rel err=%.1e", k_half_err) + fmt(" cross-path max=%.1e", cross) +
         fmt(" Legendre max=%.1e", leg) + fmt(" t=%.3fs", secs));
}

// --- 3 ---------------------------------------------------------------------
void log_shift_sharpness(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const double a_c = certify::find_a_c().value;
  const auto cfg = certify::theorem_scan_config();
  auto g = [](double a) { return [a](const UnitArg& x) { return family::g_factor({a}, x); }; };
  c.expect(verified(g(a_c + 1e-3), Sign::nonnegative, cfg), "g >= 0 at a_c+1e-3");
  c.expect(refuted(g(a_c - 1e-3), Sign::nonnegative, cfg), "witness at a_c-1e-3");
  c.expect(verified(g(4.0 / 3.0), Sign::nonpositive, cfg), "g <= 0 at 4/3");
  c.expect(refuted(g(4.0 / 3.0 + 1e-2), Sign::nonpositive, cfg), "witness at 4/3+1e-2");
  c.expect(refuted(g(4.0 / 3.0 - 1e-2), Sign::nonpositive, cfg), "witness at 4/3-1e-2");
  const double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime < 10 s");
  c.note(fmt("grid n=%.0f", cfg.n) + fmt(" t=%.3fs", secs));
}

// --- 4 ---------------------------------------------------------------------
void reciprocal_sharpness(Checks& c) {
  const auto cfg = certify::theorem_scan_config();
  auto v = [](double a) {
    return [a](const UnitArg& x) { return family::recip_f_second_sign({a}, x); };
  };
  const double l4 = constants::log4;
  c.expect(verified(v(l4 - 1e-3), Sign::nonnegative, cfg), "convex at log4-1e-3");
  c.expect(verified(v(l4), Sign::nonnegative, cfg), "convex at log4");
  c.expect(refuted(v(l4 + 1e-3), Sign::nonnegative, cfg), "witness at log4+1e-3");
  c.expect(verified(v(1.6 + 1e-3), Sign::nonpositive, cfg), "concave at 8/5+1e-3");
  c.expect(verified(v(1.6), Sign::nonpositive, cfg), "concave at 8/5");
  c.expect(refuted(v(1.6 - 1e-3), Sign::nonpositive, cfg), "witness at 8/5-1e-3");
  const double at0 = family::phi(UnitArg(1e-9));
  const double at1 = family::phi(UnitArg::from_complement(1e-9));
  c.expect(std::abs(at0 - 1.6) <= 1e-6, "phi(1e-9) within 1e-6 of 8/5");
  c.expect(std::abs(at1 - l4) <= 1e-6, "phi(1-1e-9) within 1e-6 of log 4");
  c.note(fmt("phi(1e-9)-8/5=%.1e", at0 - 1.6) + fmt(" phi(1-1e-9)-log4=%.1e", at1 - l4));
}

// --- 5 ---------------------------------------------------------------------
void log_concavity_sharpness(Checks& c) {
  const auto cfg = certify::theorem_scan_config();
  auto pg = [](double p) {
    return [p](const UnitArg& x) { return family::log_h_second_factor({p}, x); };
  };
  const double p0 = constants::p_logconcave;
  c.expect(verified(pg(p0), Sign::nonnegative, cfg), "log-concave at 7/32");
  c.expect(verified(pg(p0 + 1e-3), Sign::nonnegative, cfg), "log-concave at 7/32+1e-3");
  c.expect(refuted(pg(p0 - 1e-3), Sign::nonnegative, cfg), "witness at 7/32-1e-3");
  c.expect(verified(pg(-1e-3), Sign::nonpositive, cfg), "log-convex at -1e-3");
  c.expect(refuted(pg(1e-3), Sign::nonpositive, cfg), "witness at +1e-3");
  const double at0 = family::curvature_g(near_zero);
  const double at1 = family::curvature_g(near_one);
  c.expect(std::abs(at0 + 7.0 / 32.0) <= 1e-7, "G(1e-9) within 1e-7 of -7/32");
  c.expect(std::abs(at1) <= 1e-7, "G(tail:1e7) within 1e-7 of 0");
  c.note(fmt("G(1e-9)+7/32=%.1e", at0 + 7.0 / 32.0) + fmt(" G(tail:1e7)=%.1e", at1) +
         fmt(" G(1-1e-9)=%.3e", family::curvature_g(UnitArg::from_complement(1e-9))));
}

// --- 6 ---------------------------------------------------------------------
void power_family_suite(Checks& c) {
  const auto cfg = certify::theorem_scan_config();
  auto j = [](double p) { return [p](const UnitArg& x) { return family::j_factor({p}, x); }; };
  const double hi = constants::p_convex_hi, lo = constants::p_concave_lo;
  c.expect(verified(j(hi + 1e-3), Sign::nonnegative, cfg), "convex at p_hi+1e-3");
  c.expect(refuted(j(hi - 1e-3), Sign::nonnegative, cfg), "witness at p_hi-1e-3");
  c.expect(verified(j(lo + 1e-3), Sign::nonpositive, cfg), "concave at p_lo+1e-3");
  c.expect(refuted(j(lo - 1e-3), Sign::nonpositive, cfg), "witness at p_lo-1e-3");
  c.expect(verified(j(1.0 - 1e-3), Sign::nonpositive, cfg), "concave at 1-1e-3");
  c.expect(refuted(j(1.0 + 1e-3), Sign::nonpositive, cfg), "witness at 1+1e-3");

  // (1-x)^(2-p) h_p'' / K = J_p / (4 x^2 K) at x = 1 - 1e-6, and (1-x)^(2-p) h_p'' at 1e-6.
  const auto x1 = UnitArg::from_complement(1e-6);
  double worst_one = 0.0, worst_one_alt = 0.0, worst_zero = 0.0;
  for (double p : {-0.5, 0.5, 1.5, 2.0}) {
    const double lhs = family::j_factor({p}, x1) / (4 * x1.x() * x1.x() * specfun::ellip_k(x1));
    worst_one = std::max(worst_one, rel(lhs, 4 * p * (p - 1)));
    worst_one_alt = std::max(worst_one_alt, rel(lhs, p * (p - 1)));
    const double x0 = 1e-6;
    const double at_zero = family::j_factor({p}, UnitArg(x0)) / (4 * x0 * x0);
    worst_zero = std::max(worst_zero, rel(at_zero, pi / 64 * (32 * p * p - 48 * p + 9)));
  }
  c.expect(worst_one <= 1e-4, "limit 4p(p-1) at 1-1e-6 to 1e-4");
  c.expect(worst_zero <= 1e-4, "limit (pi/64)(32p^2-48p+9) at 1e-6 to 1e-4");

  double prev = 1.0;
  bool decreasing = true;
  std::string xs;
  for (double p : {0.05, 0.1, 0.2}) {
    const auto tp = certify::find_x_p({p});
    c.expect(std::abs(family::l_factor({p}, tp.x)) <= 1e-12 * specfun::ellip_k(tp.x),
             fmt("|L_p(x_p)| <= 1e-12 K at p=%g", p));
    decreasing = decreasing && tp.x.x() <= prev;
    prev = tp.x.x();
    xs += (xs.empty() ? "" : ",") + tp.x.to_string();
  }
  c.expect(decreasing, "x_p decreasing in p");
  c.note(fmt("limit at 1: rel err vs 4p(p-1)=%.2e", worst_one) + fmt(" vs p(p-1)=%.2e", worst_one_alt) +
         fmt(" limit at 0: rel err=%.1e", worst_zero) + " x_p(0.05,0.1,0.2)=" + xs);
}

// --- 7 ---------------------------------------------------------------------
void lemma_scans(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  using namespace family;
  auto ends = [&](const char* name, const certify::ScalarFn& fn, double v0, double v1) {
    c.expect(std::abs(fn(near_zero) - v0) <= 1e-6, std::string(name) + " value at 0");
    if (std::isfinite(v1)) c.expect(std::abs(fn(near_one) - v1) <= 1e-6, std::string(name) + " value at 1");
  };
  auto pointwise = [&](const char* name, const certify::ScalarFn& lhs_minus_rhs) {
    c.expect(verified(lhs_minus_rhs, Sign::nonnegative, grid()), name);
  };

  auto ex = [](const UnitArg& x) { return excess_gap(x); };
  c.expect(monotone(ex, Direction::increasing), "(2-x)K-2E increasing");
  ends("(2-x)K-2E", ex, 0.0, INFINITY);
  pointwise("(2-x)K-2E >= (2/pi)(E^2-(1-x)K^2)",
            [](const UnitArg& x) { return excess_gap(x) - 2 / pi * square_gap(x); });
  auto rs = [](const UnitArg& x) { return root_sum(x); };
  c.expect(monotone(rs, Direction::decreasing), "E+sqrt(1-x)K decreasing");
  ends("E+sqrt(1-x)K", rs, pi, 1.0);
  // Items 4 and 5 are stated on (0, alpha).
  auto below_alpha = grid();
  below_alpha.hi = constants::alpha_lemma;
  c.expect(verified([](const UnitArg& x) {
             return square_gap(x) - pi / 16 * x.x() * x.x() * specfun::ellip_k(x);
           }, Sign::nonnegative, below_alpha),
           "E^2-(1-x)K^2 >= (pi/16)x^2 K on (0, alpha)");
  c.expect(monotone([](const UnitArg& x) {
             return square_gap(x) / (x.x() * x.x() * specfun::ellip_k(x));
           }, Direction::increasing, below_alpha),
           "(E^2-(1-x)K^2)/(x^2 K) increasing on (0, alpha)");
  c.expect(verified([](const UnitArg& x) {
             return root_gap(x) - x.x() * x.x() / 16 * specfun::ellip_k(x);
           }, Sign::nonnegative, below_alpha),
           "E-sqrt(1-x)K >= (x^2/16)K on (0, alpha)");
  c.expect(monotone([](const UnitArg& x) {
             return root_gap(x) / (x.x() * x.x() * specfun::ellip_k(x));
           }, Direction::increasing, below_alpha),
           "(E-sqrt(1-x)K)/(x^2 K) increasing on (0, alpha)");
  auto ph = [](const UnitArg& x) { return phi(x); };
  c.expect(monotone(ph, Direction::decreasing), "phi decreasing");
  ends("phi", ph, 1.6, constants::log4);

  auto r1 = [](const UnitArg& x) { return linear_gap(x) / x.x(); };
  c.expect(monotone(r1, Direction::increasing), "(E-(1-x)K)/x increasing");
  ends("(E-(1-x)K)/x", r1, pi / 4, 1.0);
  auto r2 = [](const UnitArg& x) { return square_gap(x) / (x.x() * x.x()); };
  c.expect(monotone(r2, Direction::increasing), "(E^2-(1-x)K^2)/x^2 increasing");
  ends("(E^2-(1-x)K^2)/x^2", r2, pi * pi / 32, 1.0);

  auto u = [](const UnitArg& x) { return u_aux(x); };
  c.expect(monotone(u, Direction::increasing), "u increasing");
  ends("u", u, 9.0 / 16.0, 2.0 / pi);
  c.expect(u_aux(UnitArg::from_complement(1e-8)) < 2.0 / pi, "u(1-1e-8) < 2/pi");
  auto d = [](const UnitArg& x) { return delta_aux(x); };
  c.expect(monotone(d, Direction::increasing), "Delta increasing");
  ends("Delta", d, 0.0, INFINITY);
  pointwise("w_- <= log(1-x)/2 + 2", [](const UnitArg& x) { return 2.0 - x.theta() - w_minus(x); });

  auto gg = [](const UnitArg& x) { return curvature_g(x); };
  c.expect(monotone(gg, Direction::increasing), "G increasing");
  pointwise("G > -7/32", [](const UnitArg& x) { return curvature_g(x) + 7.0 / 32.0; });
  pointwise("G < 0", [](const UnitArg& x) { return -curvature_g(x); });
  pointwise("phi multiplier > 0", [](const UnitArg& x) { return phi_multiplier(x); });

  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime < 30 s");
  c.note("grid n=10000, limits at x=1e-9 and x=tail:1e7" + fmt(", t=%.3fs", secs));
}

// --- 8 ---------------------------------------------------------------------
void inequality_suite(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = inequalities::run_all();
  for (const auto& r : reports) {
    c.expect(r.passed(), r.name + fmt(" param=%g passes", r.param));
    if (r.name == "sum-bounds" || r.name == "weighted-sum" || r.name == "product-pair") {
      c.expect(r.equality_points.size() == 1 && std::abs(r.equality_points[0] - 0.5) <= 1e-9,
               r.name + " equality only at r=1/2");
    }
  }
  const auto control = inequalities::check_sum_bounds({1.3});
  c.expect(!control.passed() && control.witness.has_value(), "sum bounds at a=1.3 fail with a witness");

  const auto t1 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"verify", "all"}, out, err);
  const double verify_secs = seconds_since(t1);
  c.expect(code == 0, "verify all exits 0");
  c.expect(verify_secs < 60.0, "verify all under 60 s");
  std::string witness = control.witness ? control.witness->x.to_string() : "none";
  c.note(fmt("%.0f reports", static_cast<double>(reports.size())) + ", control witness r=" + witness +
         fmt(", verify all t=%.3fs", verify_secs) + fmt(", total t=%.3fs", seconds_since(t0)));
}

// --- 9 ---------------------------------------------------------------------
void oracle_independence(Checks& c) {
  const auto t0 = std::chrono::steady_clock::now();
  // The pinned constants are the oracle's output.
  const auto values = oracle::reference_values();
  auto oracle_value = [&](const std::string& name) {
    for (const auto& [n, v] : values) {
      if (n == name) return static_cast<double>(v);
    }
    c.expect(false, "oracle has " + name);
    return std::nan("");
  };
  struct Pin {
    const char* name;
    double frozen;
  };
  const Pin pins[] = {{"k_0_9", pinned::k_0_9},
                      {"e_0_3", pinned::e_0_3},
                      {"k_half", pinned::k_half},
                      {"e_half", pinned::e_half},
                      {"hyp_half_half_two_at_one", pinned::hyp_half_half_two_at_one},
                      {"hyp_half_half_two_near_one", pinned::hyp_half_half_two_near_one},
                      {"hyp_half_half_two_0_99", pinned::hyp_half_half_two_0_99},
                      {"hyp_half_half_one_0_9", pinned::hyp_half_half_one_0_9},
                      {"dk_at_zero", pinned::dk_at_zero},
                      {"de_at_zero", pinned::de_at_zero},
                      {"dk_0_9", pinned::dk_0_9},
                      {"de_0_9", pinned::de_0_9},
                      {"phi_half", pinned::phi_half},
                      {"phi_crossing_a_1_5", pinned::phi_crossing_a_1_5},
                      {"x_p_0_1", pinned::x_p_0_1},
                      {"g_curv_0_3", pinned::g_curv_0_3},
                      {"p_convex_hi", pinned::p_convex_hi},
                      {"p_concave_lo", pinned::p_concave_lo},
                      {"alpha_lemma", pinned::alpha_lemma},
                      {"a_c_argmax", pinned::a_c_argmax},
                      {"a_c", pinned::a_c},
                      {"w_plus_0_3", pinned::w_plus_0_3},
                      {"sum_f_1_47_at_1e_6", pinned::sum_f_1_47_at_1e_6}};
  c.expect(values.size() == std::size(pins), "every oracle value is pinned");
  for (const auto& p : pins) {
    c.expect(rel(oracle_value(p.name), p.frozen) <= 1e-15, std::string("oracle reproduces ") + p.name);
  }
  const auto spots = oracle::spot_values();
  for (std::size_t i = 0; i < spots.r.size(); ++i) {
    c.expect(spots.r[i] == pinned::spot_r[i] && rel(spots.k[i], pinned::spot_k[i]) <= 1e-15 &&
                 rel(spots.e[i], pinned::spot_e[i]) <= 1e-15 &&
                 rel(spots.sum_f_1_47[i], pinned::spot_sum_f_1_47[i]) <= 1e-15,
             "oracle reproduces spot values");
  }

  // The production path agrees with the pinned values.
  using namespace specfun;
  auto agree = [&](const char* what, double got, double want, double tol) {
    c.expect(rel(got, want) <= tol, std::string("production ") + what);
  };
  agree("K(0.9)", ellip_k(0.9), pinned::k_0_9, 1e-13);
  agree("E(0.3)", ellip_e(0.3), pinned::e_0_3, 1e-13);
  agree("K(1/2)", ellip_k(0.5), pinned::k_half, 1e-13);
  agree("E(1/2)", ellip_e(0.5), pinned::e_half, 1e-13);
  agree("2F1 at 1", hyp2f1_at_one({0.5, 0.5, 2.0}), pinned::hyp_half_half_two_at_one, 1e-14);
  agree("2F1 near 1", hyp2f1({0.5, 0.5, 2.0}, 1 - 1e-6, {1e-17, 100'000'000}),
        pinned::hyp_half_half_two_near_one, 1e-8);
  agree("2F1 Euler at 0.99", hyp2f1_euler({0.5, 0.5, 2.0}, 0.99), pinned::hyp_half_half_two_0_99, 1e-10);
  agree("2F1 at 0.9", hyp2f1({0.5, 0.5, 1.0}, 0.9), pinned::hyp_half_half_one_0_9, 1e-12);
  agree("dK at 0", d_ellip_k(near_zero), pinned::dk_at_zero, 1e-8);
  agree("dE at 0", d_ellip_e(near_zero), pinned::de_at_zero, 1e-8);
  agree("dK(0.9)", d_ellip_k(UnitArg(0.9)), pinned::dk_0_9, 1e-6);
  agree("dE(0.9)", d_ellip_e(UnitArg(0.9)), pinned::de_0_9, 1e-6);
  agree("phi(1/2)", family::phi(UnitArg(0.5)), pinned::phi_half, 1e-12);
  c.expect(std::abs(family::phi(UnitArg(pinned::phi_crossing_a_1_5)) - 1.5) <= 1e-12,
           "production phi crossing at a=1.5");
  agree("x_p(0.1)", certify::find_x_p({0.1}).x.complement(), 1 - pinned::x_p_0_1, 1e-9);
  agree("G(0.3)", family::curvature_g(UnitArg(0.3)), pinned::g_curv_0_3, 1e-12);
  agree("p_convex_hi", constants::p_convex_hi, pinned::p_convex_hi, 1e-15);
  agree("p_concave_lo", constants::p_concave_lo, pinned::p_concave_lo, 1e-15);
  agree("alpha", constants::alpha_lemma, pinned::alpha_lemma, 1e-15);
  const auto ac = certify::find_a_c();
  c.expect(std::abs(ac.x_star.x() - pinned::a_c_argmax) <= 1e-9, "production argmax of w_plus");
  agree("a_c", ac.value, pinned::a_c, 1e-12);
  agree("w_plus(0.3)", family::w_plus(UnitArg(0.3)), pinned::w_plus_0_3, 1e-12);
  agree("H_1.47(1e-6)", inequalities::sum_f({1.47}, UnitArg(1e-6)), pinned::sum_f_1_47_at_1e_6, 1e-12);
  for (std::size_t i = 0; i < 10; ++i) {
    const UnitArg r(pinned::spot_r[i]);
    agree("spot K", ellip_k(r), pinned::spot_k[i], 1e-13);
    agree("spot E", ellip_e(r), pinned::spot_e[i], 1e-13);
    agree("spot H", inequalities::sum_f({1.47}, r), pinned::spot_sum_f_1_47[i], 1e-13);
  }
  c.note(fmt("%.0f oracle scalars", static_cast<double>(values.size())) + " + 40 spot values" +
         fmt(", t=%.3fs", seconds_since(t0)));
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Checks&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"a_c reproduction", a_c_reproduction},
      {"kernel accuracy", kernel_accuracy},
      {"log-shift family sharpness", log_shift_sharpness},
      {"reciprocal family sharpness", reciprocal_sharpness},
      {"log-concavity sharpness", log_concavity_sharpness},
      {"power family suite", power_family_suite},
      {"auxiliary monotonicity scans", lemma_scans},
      {"inequality suite", inequality_suite},
      {"oracle independence", oracle_independence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (!c.ok()) ++failed;
    std::printf("[%s] criterion %zu: %s (%.2fs) %s\n", c.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].title, secs, c.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
