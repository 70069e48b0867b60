#include <cmath>
#include <string>

#include "ellipconv/errors.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::specfun {

void HypParams::validate() const {
  if (c <= 0.0 && c == std::floor(c)) {
    throw DomainError("2F1 lower parameter c=" + std::to_string(c) +
                      " is zero or a negative integer");
  }
}

double hyp2f1(const HypParams& p, double x, const SeriesOptions& opts) {
  p.validate();
  if (!(std::fabs(x) < 1.0)) {
    throw DomainError("2F1 series requires |x| < 1, got " + std::to_string(x));
  }
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t n = 0; n < opts.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.a + dn) * (p.b + dn) * x / ((p.c + dn) * (1.0 + dn));
    sum += term;
    // A terminating series (a or b a non-positive integer) ends with an exact zero.
    if (std::fabs(term) < opts.rel_tol * std::fabs(sum)) return sum;
  }
  throw NonConvergenceError("2F1(" + std::to_string(p.a) + ", " + std::to_string(p.b) + "; " +
                            std::to_string(p.c) + "; " + std::to_string(x) +
                            ") did not converge within " + std::to_string(opts.max_terms) +
                            " terms");
}

double hyp2f1_euler(const HypParams& p, double x, const SeriesOptions& opts) {
  p.validate();
  if (!(std::fabs(x) < 1.0)) {
    throw DomainError("2F1 series requires |x| < 1, got " + std::to_string(x));
  }
  const HypParams swapped{p.c - p.a, p.c - p.b, p.c};
  return std::pow(1.0 - x, p.c - p.a - p.b) * hyp2f1(swapped, x, opts);
}

double hyp2f1_at_one(const HypParams& p) {
  p.validate();
  const double excess = p.c - p.a - p.b;
  if (!(excess > 0.0)) {
    throw DomainError("2F1 at x=1 converges only for c > a + b");
  }
  return std::tgamma(p.c) * std::tgamma(excess) /
         (std::tgamma(p.c - p.a) * std::tgamma(p.c - p.b));
}

}  // namespace ellipconv::specfun
