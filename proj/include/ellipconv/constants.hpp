#pragma once

#include <numbers>

namespace ellipconv::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;
inline constexpr double log4 = 2.0 * std::numbers::ln2;

// Gamma(1/4) and Gamma(3/4) to 40 digits, from a 45-digit mpmath evaluation.
// These are the only Gamma values the library needs.
inline constexpr double gamma_quarter = 3.625609908221908311930685155867672002995;
inline constexpr double gamma_three_quarters = 1.225416702465177645129098303362890526851;

// Thresholds of the parameter families.
inline constexpr double p_logconcave = 7.0 / 32.0;
inline constexpr double p_monotone = 0.25;
inline constexpr double p_convex_hi = 3.0 * (2.0 + std::numbers::sqrt2) / 8.0;
inline constexpr double p_concave_lo = 3.0 * (2.0 - std::numbers::sqrt2) / 8.0;
inline constexpr double a_concave = 4.0 / 3.0;
inline constexpr double a_recip_convex = log4;
inline constexpr double a_recip_concave = 8.0 / 5.0;
// (8/97)(11 - 2 sqrt 6).
inline constexpr double alpha_lemma = (8.0 / 97.0) * (11.0 - 2.0 * 2.449489742783178098197284074705891391965);

}  // namespace ellipconv::constants
