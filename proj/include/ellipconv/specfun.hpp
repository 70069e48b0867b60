#pragma once

#include <cstddef>

#include "ellipconv/unit_arg.hpp"

/// Complete elliptic integrals and the Gauss hypergeometric series.
///
/// Argument convention: every function takes the *parameter* x = m, i.e.
/// ellip_k(x) is the integral of 1 / sqrt(1 - x sin^2 t) over (0, pi/2).
/// The modulus form lives in the `modulus` namespace below and nowhere else.
namespace ellipconv::specfun {

/// Everything the family functions need from one AGM run.
///
/// `sigma` is ((K - E) / (x K) - 1/2) / x, computed from the AGM c-sequence
/// as a sum of positive terms.  It rises from 1/16 at x = 0 to 1/2 at x = 1,
/// and all the combinations that cancel catastrophically near x = 0
/// (K - E, E - (1-x)K, (2-x)K - 2E, ...) are polynomial in x and sigma.
/// `tau` = sigma - 1/16, again without cancellation.
///
/// `k_minus_theta` and `e_minus_one` carry K - theta and E - 1 accurately in
/// the deep tail, where K and E themselves saturate.
struct EllipticKernel {
  double k;
  double e;
  double sigma;
  double tau;
  double k_minus_theta;
  double e_minus_one;
};

EllipticKernel elliptic_kernel(const UnitArg& x);

/// K(x); 0 <= x < 1.
double ellip_k(double x);
double ellip_k(const UnitArg& x);
/// E(x); 0 <= x <= 1.
double ellip_e(double x);
double ellip_e(const UnitArg& x);

/// dK/dx = (E - (1-x)K) / (2x(1-x)), evaluated without cancellation.
double d_ellip_k(const UnitArg& x);
/// dE/dx = (E - K) / (2x); always negative.
double d_ellip_e(const UnitArg& x);

/// Logarithmic expansion of K at x -> 1:
/// log 4 + theta + (1-x) theta / 4, theta = -log(1-x)/2.
/// Throws DomainError unless x > window.
double k_near_one(const UnitArg& x, double window = 0.9);

/// E K' + E' K - K K' - pi/2, primes denoting evaluation at 1 - x.
double legendre_residual(const UnitArg& x);

/// Upper/lower parameters of 2F1(a, b; c; x).
struct HypParams {
  double a;
  double b;
  double c;
  /// Throws DomainError if c is zero or a negative integer.
  void validate() const;
};

struct SeriesOptions {
  double rel_tol = 1e-17;
  std::size_t max_terms = 1'000'000;
};

/// Power series of 2F1 with the term recurrence
/// t_{n+1} = t_n (a+n)(b+n) x / ((c+n)(1+n)).  Requires |x| < 1.
double hyp2f1(const HypParams& p, double x, const SeriesOptions& opts = {});

/// (1-x)^(c-a-b) 2F1(c-a, c-b; c; x), the Euler-transformed evaluation.
double hyp2f1_euler(const HypParams& p, double x, const SeriesOptions& opts = {});

/// Gauss's value Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); needs c > a + b.
double hyp2f1_at_one(const HypParams& p);

/// Classical-modulus adapters: K(r) and E(r) as functions of r = sqrt(x).
namespace modulus {
double ellip_k(double r);
double ellip_e(double r);
}  // namespace modulus

}  // namespace ellipconv::specfun
