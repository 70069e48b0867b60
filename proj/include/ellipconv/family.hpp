#pragma once

#include "ellipconv/unit_arg.hpp"

/// The parameter families f_a(x) = K(x) / (a - log(1-x)/2) and
/// h_p(x) = (1-x)^p K(x), together with the auxiliary functions whose signs
/// decide their convexity.  Second derivatives are never differentiated
/// numerically: each is exposed as an explicit factor carrying its sign.
namespace ellipconv::family {

enum class Endpoint { zero, one };

/// Log-shift parameter a of f_a.
struct LogShiftParam {
  double a;
};

/// Exponent p of h_p.
struct PowerParam {
  double p;
};

/// Named thresholds.  `a_c` is filled in by certify::critical_constants();
/// the default-constructed value is NaN.
struct CriticalConstants {
  double a_c;
  double p_logconcave;
  double p_convex_hi;
  double p_concave_lo;
  double p_monotone;
  double a_recip_convex;
  double a_recip_concave;
  double alpha_lemma;

  /// All algebraic constants, a_c left as NaN.
  static CriticalConstants algebraic();
};

// --- f_a -------------------------------------------------------------------

/// K(x) / (a - log(1-x)/2).  Throws DomainError if the denominator is <= 0.
double f(LogShiftParam a, const UnitArg& x);
/// Continuous extension: pi/(2a) at 0 and 1 at 1.
double f(LogShiftParam a, Endpoint end);

// --- hypergeometric building blocks -----------------------------------------

/// u = 2F1(3/2,3/2;3;x)(1-x)/16 + 2F1(1/2,1/2;2;x)/2, increasing 9/16 -> 2/pi.
double u_aux(const UnitArg& x);
double u_aux(Endpoint end);
/// v = 2F1(1/2,1/2;2;x)/2 + 2F1(1/2,1/2;1;x).
double v_aux(const UnitArg& x);
double v_aux(Endpoint end);
/// Delta = v^2 - 4 u 2F1(1/2,1/2;1;x), increasing from 0.
double delta_aux(const UnitArg& x);
double delta_aux(Endpoint end);

/// Larger root in a of g_a(x) = 0:
/// log(1-x)/2 + (v + sqrt(Delta)) / (2u).  Tends to 4/3 at 0, log 4 at 1.
double w_plus(const UnitArg& x);
double w_plus(Endpoint end);
/// Smaller root, log(1-x)/2 + 2 2F1(1/2,1/2;1;x) / (v + sqrt(Delta)).
double w_minus(const UnitArg& x);

/// d w_plus / dx in closed form through K and E.  Loses relative accuracy
/// like eps/x for x below ~1e-3; intended for the interior maximum of w_plus.
double w_plus_slope(const UnitArg& x);

/// g_a(x) = u (a - w_+)(a - w_-); same sign as f_a''(x).
double g_factor(LogShiftParam a, const UnitArg& x);
/// The unfactored quadratic (a - L)^2 u - (a - L) v + 2F1(1/2,1/2;1;x),
/// L = log(1-x)/2.
double g_quadratic(LogShiftParam a, const UnitArg& x);

// --- 1/f_a ------------------------------------------------------------------

/// log(1-x)/2 + 2xK(E-K) / (2E^2 - 2EK + x(1-x)K^2); decreasing 8/5 -> log 4.
double phi(const UnitArg& x);
double phi(Endpoint end);

/// 2KE - x(1-x)K^2 - 2E^2, the positive multiplier relating (1/f_a)'' to
/// phi - a.
double phi_multiplier(const UnitArg& x);

/// phi(x) - a; positive exactly where 1/f_a is locally strictly convex.
double recip_f_second_sign(LogShiftParam a, const UnitArg& x);

// --- h_p --------------------------------------------------------------------

/// (1-x)^p K(x).
double h(PowerParam p, const UnitArg& x);

/// G(x) = ((2x-1)(1-x)K^2 - 2xKE + E^2) / (4x^2 K^2), increasing -7/32 -> 0.
double curvature_g(const UnitArg& x);
double curvature_g(Endpoint end);

/// p + G(x) = -(1-x)^2 (log h_p)''(x); opposite in sign to (log h_p)''.
double log_h_second_factor(PowerParam p, const UnitArg& x);

/// J_p(x) = ((4p^2-8p+3)x^2 + (4p-5)x + 2)K - 2(2(p-1)x + 1)E, with
/// h_p'' = J_p / (4x^2(1-x)^(2-p)).
double j_factor(PowerParam p, const UnitArg& x);

/// L_p(x) = E + ((1-2p)x - 1)K, with h_p' = (1-x)^(p-1) L_p / (2x).
double l_factor(PowerParam p, const UnitArg& x);

// --- monotone auxiliary combinations of K and E ------------------------------

/// (2-x)K - 2E, increasing from 0 to infinity.
double excess_gap(const UnitArg& x);
/// E - (1-x)K.
double linear_gap(const UnitArg& x);
/// E^2 - (1-x)K^2.
double square_gap(const UnitArg& x);
/// E - sqrt(1-x) K.
double root_gap(const UnitArg& x);
/// E + sqrt(1-x) K, decreasing from pi to 1.
double root_sum(const UnitArg& x);

}  // namespace ellipconv::family
