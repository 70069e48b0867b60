#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellipconv/certify.hpp"
#include "ellipconv/family.hpp"
#include "ellipconv/unit_arg.hpp"

/// Grid verification of the two-point inequalities built from f_a and h_p.
///
/// Every clause is stored as lhs <= rhs (or lhs < rhs) and checked through
/// lhs - rhs.  A clause passes when max(lhs - rhs) <= its tolerance.
namespace ellipconv::inequalities {

/// Default slack for inequality clauses.
inline constexpr double kSlack = 1e-12;
/// |lhs - rhs| below this on a non-strict clause counts as equality.
inline constexpr double kEqualityTolerance = 1e-9;
/// Equality points closer than this are merged.
inline constexpr double kClusterTolerance = 1e-6;
/// Strictness is checked only this far from equality points and the ends.
inline constexpr double kStrictnessGuard = 1e-3;

struct ClauseResult {
  std::string name;
  /// e.g. "4K(1/2)/(2a+log 2) <= H_a(r)".
  std::string relation;
  bool strict = false;
  /// Claimed at this parameter.  When no clause of a report is claimed the
  /// report is exploratory and all clauses count toward the verdict.
  bool applies = true;
  double tolerance = kSlack;
  double max_lhs_minus_rhs = -INFINITY;
  std::optional<UnitArg> argmax;
  /// lhs < rhs at every point away from equality points and the ends.
  bool strict_confirmed = true;
  bool passed = true;
};

struct Witness {
  std::string clause;
  UnitArg x;
  /// Second point, for two-point clauses.
  std::optional<UnitArg> y;
  double lhs_minus_rhs;
};

enum class Verdict { pass, fail };
std::string_view to_string(Verdict v);

struct InequalityReport {
  std::string name;
  /// a or p.
  double param = 0.0;
  std::size_t grid_n = 0;
  bool claim_applies = true;
  std::vector<ClauseResult> clauses;
  std::vector<double> equality_points;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  /// Auxiliary values worth printing, e.g. ("x_p", 0.99926...).
  std::vector<std::pair<std::string, double>> extras;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

// --- the symmetric two-point functions ------------------------------------

/// H_a(r) = f_a(r) + f_a(1-r).
double sum_f(family::LogShiftParam a, const UnitArg& r);
/// r^p K(1-r) + (1-r)^p K(r) = h_p(r) + h_p(1-r).
double weighted_sum(family::PowerParam p, const UnitArg& r);
/// (1-r)^p K(1-r) + r^p K(r).
double crossed_sum(family::PowerParam p, const UnitArg& r);
/// sqrt((r-r^2)^p K(1-r) K(r)) = sqrt(h_p(r) h_p(1-r)).
double geometric_product(family::PowerParam p, const UnitArg& r);

// --- checks ----------------------------------------------------------------

/// 4K(1/2)/(2a+log 2) <= H_a(r) < 1 + pi/(2a); claimed for a >= a_c, where
/// a_c is taken from certify::find_a_c(cfg).
InequalityReport check_sum_bounds(family::LogShiftParam a, const certify::ScanConfig& cfg = {});

/// K(1/2)/2^(p-1) <= weighted_sum < pi/2 for p >= 3(2+sqrt 2)/8, both
/// reversed for p in [3(2-sqrt 2)/8, 1].
InequalityReport check_weighted_sum(family::PowerParam p, const certify::ScanConfig& cfg = {});

/// 2^(1+p) K(1/2) (r-r^2)^p <= crossed_sum (p >= 0) and
/// geometric_product <= K(1/2)/2^p (p >= 7/32).
InequalityReport check_product_pair(family::PowerParam p, const certify::ScanConfig& cfg = {});

/// sqrt(h(x)h(y)) <= h(m)            p >= 7/32
/// (h(x)+h(y))/2 <= h(m)              p in [3(2-sqrt 2)/8, 1]
/// h(m) <= h(sqrt(xy))                p >= 1/4
/// with h = h_p and m = (x+y)/2.
InequalityReport check_mean_chain(family::PowerParam p, const UnitArg& x, const UnitArg& y);

/// The same clauses over `pairs` random (x, y) drawn uniformly from the
/// square with a mt19937_64 seeded by `seed`.
InequalityReport check_mean_chain_random(family::PowerParam p, std::size_t pairs = 1000,
                                         std::uint64_t seed = 0);

/// (pi/2)(1-r)^p < K(r) < pi/(2(1-r)^p) on (0, 1) for p >= 1/4;
/// pi/(2(1-r)^p) < K(r) < h_p(x_p)/(1-r)^p on (0, x_p) for 0 < p < 1/4.
InequalityReport check_k_envelope(family::PowerParam p, const certify::ScanConfig& cfg = {});

/// Closed forms of K(1/2) through Gamma(1/4), Gamma(3/4), the reflection
/// product Gamma(1/4)Gamma(3/4) = pi sqrt 2, the constant
/// alpha_p = Gamma(1/4)^4/(2^(2+2p) pi), and the chain
/// 4K(x)K(1-x)(x-x^2)^p <= weighted_sum^2 <= alpha_p on the grid.
/// The chain is claimed for p in [1/4, 1].
InequalityReport check_gamma_constant_identities(family::PowerParam p = {0.25},
                                                 const certify::ScanConfig& cfg = {});

/// Selector names used by the command line.
const std::vector<std::string>& check_names();

/// Runs every check with its default parameter:
/// sum-bounds a=1.47, weighted-sum p=3(2+sqrt 2)/8 and p=1/2,
/// product-pair p=1/2, mean-chain p=1/2 (random pairs), k-envelope p=1/4 and
/// p=0.1, gamma-constants p=1/4.
std::vector<InequalityReport> run_all(const certify::ScanConfig& cfg = {}, std::uint64_t seed = 0);

}  // namespace ellipconv::inequalities
