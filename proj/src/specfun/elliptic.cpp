#include <cmath>
#include <string>

#include "ellipconv/constants.hpp"
#include "ellipconv/errors.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::specfun {
namespace {

using constants::log4;
using constants::pi;

constexpr int kMaxAgmSteps = 64;

// AGM(1, sqrt(1-x)) with the c-sequence carried in scaled form q_n = c_n / x,
// c_1 = x / (2(1 + sqrt(1-x))), c_{n+1} = c_n^2 / (4 a_{n+1}).
// (K - E) / K = x/2 + sum_{n>=1} 2^{n-1} c_n^2, so sigma = sum 2^{n-1} q_n^2.
EllipticKernel agm_kernel(const UnitArg& arg) {
  const double x = arg.x();
  const double s = std::sqrt(arg.complement());
  double a = 0.5 * (1.0 + s);
  double b = std::sqrt(s);
  double c = x / (2.0 * (1.0 + s));
  double q = 1.0 / (2.0 * (1.0 + s));
  // q_1^2 - 1/16 = x (3 + s) / (16 (1 + s)^3)
  const double head_excess = x * (3.0 + s) / (16.0 * (1.0 + s) * (1.0 + s) * (1.0 + s));
  double later = 0.0;  // sum over n >= 2
  double weight = 1.0;
  for (int step = 0; step < kMaxAgmSteps; ++step) {
    const double a_next = 0.5 * (a + b);
    const double c_next = c * c / (4.0 * a_next);
    const double q_next = c * q / (4.0 * a_next);
    weight *= 2.0;
    later += weight * q_next * q_next;
    b = std::sqrt(a * b);
    a = a_next;
    c = c_next;
    q = q_next;
    if (c <= 1e-18 * a) break;
  }
  const double k = pi / (2.0 * a);
  const double sigma = 0.25 / ((1.0 + s) * (1.0 + s)) + later;
  const double tau = head_excess + later;
  const double e = k * (1.0 - 0.5 * x - x * x * sigma);
  return {k, e, sigma, tau, k - arg.theta(), e - 1.0};
}

// x -> 1 with 1 - x below 1e-24: K = L + (1-x)(L-1)/4, E = 1 + (1-x)(L-1/2)/2,
// L = log 4 + theta; omitted terms are O((1-x)^2 L).
EllipticKernel tail_kernel(const UnitArg& arg) {
  const double xc = arg.complement();
  const double big_l = log4 + arg.theta();
  const double k_excess = log4 + 0.25 * xc * (big_l - 1.0);
  const double e_excess = 0.5 * xc * (big_l - 0.5);
  const double k = arg.theta() + k_excess;
  const double e = 1.0 + e_excess;
  // x == 1 in double here, so sigma = (K - E)/K - 1/2 = 1/2 - E/K.
  const double sigma = 0.5 - e / k;
  return {k, e, sigma, sigma - 0.0625, k_excess, e_excess};
}

void require_interior(const UnitArg& x, const char* what) {
  if (x.complement() == 0.0) {
    throw DomainError(std::string(what) + " is undefined at x=" + x.to_string());
  }
}

}  // namespace

EllipticKernel elliptic_kernel(const UnitArg& x) {
  return x.deep_tail() ? tail_kernel(x) : agm_kernel(x);
}

double ellip_k(double x) {
  if (x == 0.0) return 0.5 * pi;
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("ellip_k requires 0 <= x < 1, got " + std::to_string(x));
  }
  return ellip_k(UnitArg(x));
}

double ellip_k(const UnitArg& x) { return elliptic_kernel(x).k; }

double ellip_e(double x) {
  if (x == 0.0) return 0.5 * pi;
  if (x == 1.0) return 1.0;
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("ellip_e requires 0 <= x <= 1, got " + std::to_string(x));
  }
  return ellip_e(UnitArg(x));
}

double ellip_e(const UnitArg& x) { return elliptic_kernel(x).e; }

double d_ellip_k(const UnitArg& x) {
  require_interior(x, "d_ellip_k");
  const auto ker = elliptic_kernel(x);
  // E - (1-x)K = xK(1/2 - x sigma)
  return ker.k * (0.5 - x.x() * ker.sigma) / (2.0 * x.complement());
}

double d_ellip_e(const UnitArg& x) {
  const auto ker = elliptic_kernel(x);
  // E - K = -xK(1/2 + x sigma)
  return -0.5 * ker.k * (0.5 + x.x() * ker.sigma);
}

double k_near_one(const UnitArg& x, double window) {
  if (!(x.x() > window)) {
    throw DomainError("k_near_one requires x > " + std::to_string(window) + ", got " +
                      x.to_string());
  }
  const double theta = x.theta();
  return log4 + theta + 0.25 * x.complement() * theta;
}

double legendre_residual(const UnitArg& x) {
  const auto here = elliptic_kernel(x);
  const auto there = elliptic_kernel(x.swapped());
  return here.e * there.k + there.e * here.k - here.k * there.k - 0.5 * pi;
}

namespace modulus {

double ellip_k(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("modulus::ellip_k requires 0 <= r < 1, got " + std::to_string(r));
  }
  if (r == 0.0) return 0.5 * pi;
  if (r * r < 0.5) return specfun::ellip_k(UnitArg(r * r));
  return specfun::ellip_k(UnitArg::from_complement((1.0 - r) * (1.0 + r)));
}

double ellip_e(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("modulus::ellip_e requires 0 <= r <= 1, got " + std::to_string(r));
  }
  if (r == 0.0) return 0.5 * pi;
  if (r == 1.0) return 1.0;
  if (r * r < 0.5) return specfun::ellip_e(UnitArg(r * r));
  return specfun::ellip_e(UnitArg::from_complement((1.0 - r) * (1.0 + r)));
}

}  // namespace modulus
}  // namespace ellipconv::specfun
