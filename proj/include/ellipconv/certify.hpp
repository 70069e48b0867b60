#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellipconv/family.hpp"
#include "ellipconv/unit_arg.hpp"

/// Numerical certificates for the sign and monotonicity claims on (0, 1).
///
/// A certificate is numerical evidence, not a proof: the claim is checked on
/// a grid with local refinement around the smallest margins.
namespace ellipconv::certify {

using ScalarFn = std::function<double(const UnitArg&)>;

/// Scan interval and resolution.
///
/// The uniform grid runs over [lo, hi] pulled in by `endpoint_offset` at an
/// endpoint of the unit interval.  `endpoint_points` geometric points are
/// added next to 0 and 1.  When `tail_points` > 0 and hi == 1 the scan is
/// continued past 1 - endpoint_offset on a geometric grid in
/// theta = -log(1-x)/2 up to `tail_theta_max`; this is the only way to reach
/// the region where K(x) is in the hundreds.
struct ScanConfig {
  double lo = 0.0;
  double hi = 1.0;
  int n = 10000;
  double endpoint_offset = 1e-9;
  int refine_depth = 4;
  int endpoint_points = 20;
  int tail_points = 0;
  double tail_theta_max = 1e6;

  /// Throws DomainError on an inconsistent configuration.
  void validate() const;
};

/// Sorted scan abscissae for a configuration.
std::vector<UnitArg> scan_grid(const ScanConfig& cfg);

enum class Sign { nonnegative, nonpositive };
enum class Direction { increasing, decreasing };

enum class Verdict { nonnegative, nonpositive, increasing, decreasing, mixed, inconclusive };

std::string_view to_string(Verdict v);
std::string_view to_string(Sign s);
std::string_view to_string(Direction d);

/// Violations smaller than this are attributed to rounding.
inline constexpr double kViolationTolerance = 1e-12;

struct SignCertificate {
  Verdict verdict = Verdict::inconclusive;
  /// The first point (in increasing x) where the claim fails.
  std::optional<UnitArg> witness_x;
  /// fn(witness_x).
  std::optional<double> witness_value;
  /// For monotonicity scans: the grid point preceding the witness.
  std::optional<UnitArg> witness_previous_x;
  /// Smallest |value| (or |difference| for monotonicity) on the claimed side.
  double min_abs_margin = 0.0;
  /// Where that smallest margin was seen.
  std::optional<UnitArg> margin_x;
  std::size_t evaluations = 0;

  bool verified() const noexcept {
    return verdict != Verdict::mixed && verdict != Verdict::inconclusive;
  }
};

/// Checks fn >= 0 (or <= 0) on the scan grid.  Points whose value is within
/// 10x the smallest margin are refined `refine_depth` times.  Evaluation
/// errors are rethrown as EvaluationError naming the abscissa; a non-finite
/// value makes the certificate inconclusive.
SignCertificate certify_sign(const ScalarFn& fn, Sign claimed, const ScanConfig& cfg);

/// Checks that consecutive grid values move in the claimed direction.
SignCertificate certify_monotone(const ScalarFn& fn, Direction claimed, const ScanConfig& cfg);

struct ExtremumResult {
  UnitArg x_star{0.5};
  double value = 0.0;
  /// Width of the final bracket around x_star.
  double tolerance = 0.0;
  /// Largest value on the coarse grid.
  double grid_max = 0.0;
  /// False when the grid maximum sits at the first or last grid point.
  bool conclusive = true;
  std::size_t evaluations = 0;
};

/// a_c, the maximum of w_plus over (0, 1): coarse scan, golden-section
/// refinement of the best bracket, then bisection on the closed-form slope.
/// Ties on the grid go to the leftmost point.
ExtremumResult find_a_c(const ScanConfig& cfg = {});

/// Golden-section maximisation of fn on [lo, hi] until the bracket is
/// narrower than `width`.  Returns the final bracket.
std::pair<double, double> golden_section_max(const std::function<double(double)>& fn, double lo,
                                             double hi, double width);

/// The unique zero x_p of L_p in (0, 1) for 0 < p < 1/4.
struct TurningPoint {
  UnitArg x;
  /// |L_p(x)| / K(x).
  double residual;
};

/// Bracket by a scan in logit(x), then bisection to full resolution.
/// Throws BracketError for p outside (0, 1/4) and NonConvergenceError if the
/// final |L_p| exceeds tol K.
TurningPoint find_x_p(family::PowerParam p, double tol = 1e-12);

/// Verifies that L_p is positive before x_p and negative after it, away from
/// a gap of relative width tol in logit(x) around x_p.
bool x_p_is_unique(family::PowerParam p, const UnitArg& x_p, double tol = 1e-9);

/// Full constant table with a_c computed by find_a_c(cfg).
family::CriticalConstants critical_constants(const ScanConfig& cfg = {});

// --- theorem catalogue ------------------------------------------------------

/// Identifiers accepted by certify_theorem.
const std::vector<std::string>& theorem_ids();

/// Default scan for theorem certification: the standard grid plus a
/// 64-point tail out to theta = 1e6.
ScanConfig theorem_scan_config();

struct TheoremCertificate {
  std::string id;
  double param;
  /// Human-readable claim, e.g. "g_a >= 0" or "h_p unimodal at x_p".
  std::string claim;
  SignCertificate certificate;
  /// Set for cor15-monotone with 0 < p < 1/4.
  std::optional<TurningPoint> turning_point;
};

/// Certifies the sign claim behind a theorem id at parameter `param`:
///   thm1-convex     g_a >= 0          thm1-concave    g_a <= 0
///   thm2-convex     phi - a >= 0      thm2-concave    phi - a <= 0
///   thm3-logconcave p + G >= 0        thm3-logconvex  p + G <= 0
///   cor14-convex    J_p >= 0          cor14-concave   J_p <= 0
///   cor15-monotone  L_p <= 0 for p >= 1/4, L_p >= 0 for p <= 0, and the
///                   sign change at x_p for 0 < p < 1/4.
/// Throws DomainError for an unknown id.
TheoremCertificate certify_theorem(std::string_view id, double param, const ScanConfig& cfg);

}  // namespace ellipconv::certify
