#include "ellipconv/family.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ellipconv/constants.hpp"
#include "ellipconv/errors.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::family {
namespace {

using constants::log4;
using constants::pi;
using specfun::EllipticKernel;

// Below this x the sigma forms are used; above it the direct K, E forms.
constexpr double kSmallSide = 0.5;
// Series fallbacks next to x = 0.
constexpr double kPhiSeriesBelow = 1e-6;
constexpr double kCurvatureSeriesBelow = 1e-5;

struct HypTriple {
  double f1;  // 2F1(1/2,1/2;1;x)
  double f2;  // 2F1(1/2,1/2;2;x)
  double f3;  // 2F1(3/2,3/2;3;x)
};

HypTriple hyp_triple(const UnitArg& arg, const EllipticKernel& ker) {
  const double x = arg.x();
  const double two_k = 2.0 * ker.k / pi;
  if (x < kSmallSide) {
    return {two_k, two_k * (1.0 - 2.0 * x * ker.sigma), 16.0 * two_k * ker.sigma};
  }
  const double xc = arg.complement();
  return {two_k, 4.0 * (ker.e - xc * ker.k) / (pi * x),
          16.0 * ((1.0 + xc) * ker.k - 2.0 * ker.e) / (pi * x * x)};
}

struct QuadraticCoefficients {
  double u;
  double v;
  double delta;
  double f1;
};

QuadraticCoefficients coefficients(const UnitArg& arg) {
  const auto ker = specfun::elliptic_kernel(arg);
  const double x = arg.x();
  const auto hyp = hyp_triple(arg, ker);
  const double u = hyp.f3 * arg.complement() / 16.0 + 0.5 * hyp.f2;
  const double v = 0.5 * hyp.f2 + hyp.f1;
  double delta;
  if (x < kSmallSide) {
    const double two_k = 2.0 * ker.k / pi;
    const double s = ker.sigma;
    delta = two_k * two_k * (-4.0 * ker.tau + 5.0 * x * s + x * x * s * s);
  } else {
    delta = v * v - 4.0 * u * hyp.f1;
  }
  return {u, v, delta, hyp.f1};
}

double log_shift_denominator(LogShiftParam a, const UnitArg& x) {
  const double d = a.a + x.theta();
  if (!(d > 0.0)) {
    throw DomainError("a - log(1-x)/2 = " + std::to_string(d) + " is not positive at x=" +
                      x.to_string());
  }
  return d;
}

}  // namespace

CriticalConstants CriticalConstants::algebraic() {
  return {std::numeric_limits<double>::quiet_NaN(),
          constants::p_logconcave,
          constants::p_convex_hi,
          constants::p_concave_lo,
          constants::p_monotone,
          constants::a_recip_convex,
          constants::a_recip_concave,
          constants::alpha_lemma};
}

double f(LogShiftParam a, const UnitArg& x) {
  return specfun::ellip_k(x) / log_shift_denominator(a, x);
}

double f(LogShiftParam a, Endpoint end) {
  if (end == Endpoint::one) return 1.0;
  if (!(a.a > 0.0)) throw DomainError("f_a(0) = pi/(2a) requires a > 0");
  return pi / (2.0 * a.a);
}

double u_aux(const UnitArg& x) { return coefficients(x).u; }
double u_aux(Endpoint end) { return end == Endpoint::zero ? 9.0 / 16.0 : 2.0 / pi; }

double v_aux(const UnitArg& x) { return coefficients(x).v; }
double v_aux(Endpoint end) {
  if (end == Endpoint::one) throw DomainError("v diverges at x=1");
  return 1.5;
}

double delta_aux(const UnitArg& x) { return coefficients(x).delta; }
double delta_aux(Endpoint end) {
  if (end == Endpoint::one) throw DomainError("Delta diverges at x=1");
  return 0.0;
}

double w_plus(const UnitArg& x) {
  const auto ker = specfun::elliptic_kernel(x);
  if (x.deep_tail()) {
    // u = 2E/pi, v + sqrt(Delta) = 4K/pi there, so w_+ = K/E - theta.
    return ker.k_minus_theta - ker.k * ker.e_minus_one / ker.e;
  }
  if (x.x() < kSmallSide) {
    const double xs = x.x() * ker.sigma;
    const double root = std::sqrt(-4.0 * ker.tau + 5.0 * xs + xs * xs);
    return -x.theta() + (1.5 - xs + root) / (2.0 * (0.5 + ker.sigma - 2.0 * xs));
  }
  const auto c = coefficients(x);
  return -x.theta() + (c.v + std::sqrt(c.delta)) / (2.0 * c.u);
}

double w_plus(Endpoint end) { return end == Endpoint::zero ? 4.0 / 3.0 : log4; }

double w_minus(const UnitArg& x) {
  const auto c = coefficients(x);
  return -x.theta() + 2.0 * c.f1 / (c.v + std::sqrt(c.delta));
}

double w_plus_slope(const UnitArg& arg) {
  const double x = arg.x();
  const double xc = arg.complement();
  if (xc == 0.0) throw DomainError("w_plus_slope is undefined at x=" + arg.to_string());
  const auto ker = specfun::elliptic_kernel(arg);
  const double k = ker.k;
  const double dk = specfun::d_ellip_k(arg);
  const double de = specfun::d_ellip_e(arg);

  const auto hyp = hyp_triple(arg, ker);
  const double n3 = 2.0 * x * x * k * ker.sigma;  // (2-x)K - 2E
  const double dn3 = -k + (2.0 - x) * dk - 2.0 * de;
  const double df3 = 16.0 / pi * (dn3 / (x * x) - 2.0 * n3 / (x * x * x));
  const double df2 = hyp.f3 / 8.0;
  const double df1 = 2.0 * dk / pi;

  const auto c = coefficients(arg);
  const double du = df3 * xc / 16.0 - hyp.f3 / 16.0 + 0.5 * df2;
  const double dv = 0.5 * df2 + df1;
  const double ddelta = 2.0 * c.v * dv - 4.0 * (du * c.f1 + c.u * df1);
  const double root = std::sqrt(c.delta);
  const double num = c.v + root;
  const double dnum = dv + ddelta / (2.0 * root);
  return -0.5 / xc + (dnum * c.u - num * du) / (2.0 * c.u * c.u);
}

double g_factor(LogShiftParam a, const UnitArg& x) {
  return u_aux(x) * (a.a - w_plus(x)) * (a.a - w_minus(x));
}

double g_quadratic(LogShiftParam a, const UnitArg& x) {
  const auto c = coefficients(x);
  const double shift = a.a + x.theta();
  return shift * shift * c.u - shift * c.v + c.f1;
}

double phi(const UnitArg& arg) {
  const double x = arg.x();
  if (x < kPhiSeriesBelow) return 1.6 - 0.14 * x;
  const auto ker = specfun::elliptic_kernel(arg);
  if (arg.deep_tail()) {
    return ker.k_minus_theta - ker.k * ker.e_minus_one / ker.e;
  }
  if (x < kSmallSide) {
    const double s = ker.sigma;
    return -arg.theta() +
           (1.0 + 2.0 * x * s) / (0.5 + 2.0 * s - 2.0 * x * s - 2.0 * x * x * s * s);
  }
  const double k_minus_e = x * ker.k * (0.5 + x * ker.sigma);
  const double num = -2.0 * x * ker.k * k_minus_e;
  const double den = -2.0 * ker.e * k_minus_e + x * arg.complement() * ker.k * ker.k;
  return -arg.theta() + num / den;
}

double phi(Endpoint end) { return end == Endpoint::zero ? 1.6 : log4; }

double phi_multiplier(const UnitArg& arg) {
  const double x = arg.x();
  const auto ker = specfun::elliptic_kernel(arg);
  if (x < kSmallSide) {
    const double s = ker.sigma;
    return x * x * ker.k * ker.k * (0.5 + 2.0 * s - 2.0 * x * s - 2.0 * x * x * s * s);
  }
  const double k_minus_e = x * ker.k * (0.5 + x * ker.sigma);
  return 2.0 * ker.e * k_minus_e - x * arg.complement() * ker.k * ker.k;
}

double recip_f_second_sign(LogShiftParam a, const UnitArg& x) { return phi(x) - a.a; }

double h(PowerParam p, const UnitArg& x) {
  return std::exp(-2.0 * p.p * x.theta()) * specfun::ellip_k(x);
}

double curvature_g(const UnitArg& arg) {
  const double x = arg.x();
  if (x < kCurvatureSeriesBelow) return -7.0 / 32.0 + x / 32.0;
  const auto ker = specfun::elliptic_kernel(arg);
  if (x < kSmallSide) {
    const double s = ker.sigma;
    return (-0.75 - 2.0 * s + 3.0 * x * s + x * x * s * s) / 4.0;
  }
  const double ratio = ker.e / ker.k;
  return ((2.0 * x - 1.0) * arg.complement() - 2.0 * x * ratio + ratio * ratio) / (4.0 * x * x);
}

double curvature_g(Endpoint end) { return end == Endpoint::zero ? -7.0 / 32.0 : 0.0; }

double log_h_second_factor(PowerParam p, const UnitArg& x) { return p.p + curvature_g(x); }

double j_factor(PowerParam p, const UnitArg& arg) {
  const double x = arg.x();
  const auto ker = specfun::elliptic_kernel(arg);
  const double pp = p.p;
  const double bracket =
      4.0 * pp * pp - 6.0 * pp + 1.0 + 2.0 * ker.sigma * (1.0 + 2.0 * (pp - 1.0) * x);
  return x * x * ker.k * bracket;
}

double l_factor(PowerParam p, const UnitArg& arg) {
  const double x = arg.x();
  const auto ker = specfun::elliptic_kernel(arg);
  return x * ker.k * (0.5 - 2.0 * p.p - x * ker.sigma);
}

double excess_gap(const UnitArg& arg) {
  const auto ker = specfun::elliptic_kernel(arg);
  return 2.0 * arg.x() * arg.x() * ker.k * ker.sigma;
}

double linear_gap(const UnitArg& arg) {
  const double x = arg.x();
  const auto ker = specfun::elliptic_kernel(arg);
  if (x < kSmallSide) return x * ker.k * (0.5 - x * ker.sigma);
  return ker.e - arg.complement() * ker.k;
}

double square_gap(const UnitArg& arg) {
  const double x = arg.x();
  const auto ker = specfun::elliptic_kernel(arg);
  if (x < kSmallSide) {
    const double s = ker.sigma;
    return ker.k * ker.k * x * x * (0.25 - 2.0 * s + x * s + x * x * s * s);
  }
  return ker.e * ker.e - arg.complement() * ker.k * ker.k;
}

double root_gap(const UnitArg& arg) { return square_gap(arg) / root_sum(arg); }

double root_sum(const UnitArg& arg) {
  const auto ker = specfun::elliptic_kernel(arg);
  return ker.e + std::sqrt(arg.complement()) * ker.k;
}

}  // namespace ellipconv::family
