#include <cmath>
#include <string>

#include "ellipconv/certify.hpp"
#include "ellipconv/errors.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::certify {
namespace {

constexpr double kLogitStart = -60.0;
constexpr double kLogitStep = 0.5;
constexpr double kLogitMax = 1e8;
constexpr int kUniquenessPoints = 1000;

}  // namespace

TurningPoint find_x_p(family::PowerParam p, double tol) {
  if (!(p.p > 0.0 && p.p < 0.25)) {
    throw BracketError("L_p has constant sign on (0,1) for p=" + std::to_string(p.p) +
                       "; a turning point exists only for 0 < p < 1/4");
  }
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  auto l_at = [&](double z) { return family::l_factor(p, UnitArg::from_logit(z)); };

  double z_lo = kLogitStart;
  if (!(l_at(z_lo) > 0.0)) throw BracketError("L_p is not positive at the left end of the scan");
  double z_hi = z_lo;
  double step = kLogitStep;
  while (true) {
    z_hi = z_lo + step;
    if (z_hi > kLogitMax) throw BracketError("no sign change of L_p found");
    if (l_at(z_hi) <= 0.0) break;
    z_lo = z_hi;
    if (z_hi > 60.0) step *= 2.0;
  }

  // Bisect to the resolution of z; the tolerance is only checked at the end.
  for (int it = 0; it < 400; ++it) {
    const double z_mid = 0.5 * (z_lo + z_hi);
    if (z_mid <= z_lo || z_mid >= z_hi) break;
    (l_at(z_mid) > 0.0 ? z_lo : z_hi) = z_mid;
  }
  const UnitArg left = UnitArg::from_logit(z_lo);
  const UnitArg right = UnitArg::from_logit(z_hi);
  const double r_left = std::abs(family::l_factor(p, left)) / specfun::ellip_k(left);
  const double r_right = std::abs(family::l_factor(p, right)) / specfun::ellip_k(right);
  TurningPoint tp = r_left <= r_right ? TurningPoint{left, r_left} : TurningPoint{right, r_right};
  if (!(tp.residual <= tol)) {
    throw NonConvergenceError("x_p bisection stalled with |L_p|/K = " +
                              std::to_string(tp.residual));
  }
  return tp;
}

bool x_p_is_unique(family::PowerParam p, const UnitArg& x_p, double tol) {
  const double z_p = x_p.logit();
  const double dz = tol * (1.0 + std::abs(z_p));
  const double left_lo = std::min(z_p - 40.0, -40.0);
  const double right_hi = z_p + 40.0 + std::abs(z_p);
  for (int i = 0; i <= kUniquenessPoints; ++i) {
    const double t = static_cast<double>(i) / kUniquenessPoints;
    const double zl = left_lo + t * (z_p - dz - left_lo);
    const double zr = z_p + dz + t * (right_hi - z_p - dz);
    if (!(family::l_factor(p, UnitArg::from_logit(zl)) > 0.0)) return false;
    if (!(family::l_factor(p, UnitArg::from_logit(zr)) < 0.0)) return false;
  }
  return true;
}

}  // namespace ellipconv::certify
