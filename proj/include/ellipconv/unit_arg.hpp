#pragma once

#include <string>
#include <string_view>

namespace ellipconv {

/// A point of the open unit interval, the common argument of every function
/// in the library (x is the elliptic *parameter*, x = r^2 for modulus r).
///
/// The point is stored redundantly as x, its complement 1 - x and
/// theta = -log(1 - x) / 2.  Points with x < 1/2 are anchored on x; points
/// with x >= 1/2 are anchored on the exactly representable complement.  When
/// 1 - x is too small even for the complement (below ~1e-300) the point is
/// anchored on theta alone, so the region x -> 1 stays reachable for sign
/// scans whose behaviour there is only logarithmic in 1 - x.
class UnitArg {
 public:
  /// Requires 0 < x < 1; throws DomainError otherwise.  Implicit on purpose:
  /// every function taking a UnitArg also accepts a plain double.
  UnitArg(double x);  // NOLINT(google-explicit-constructor)

  /// x = 1 - t for 0 < t < 1.
  static UnitArg from_complement(double t);
  /// x = 1 / (1 + exp(-z)); both ends of the interval at full precision.
  static UnitArg from_logit(double z);
  /// theta = -log(1 - x) / 2 > 0.
  static UnitArg from_log_complement(double theta);

  double x() const noexcept { return x_; }
  /// 1 - x; may underflow to 0 for points anchored on theta.
  double complement() const noexcept { return xc_; }
  /// -log(1 - x) / 2, always finite and positive.
  double theta() const noexcept { return theta_; }
  /// log(x / (1 - x)).
  double logit() const noexcept;

  /// The point 1 - x.
  UnitArg swapped() const;

  /// True when 1 - x is below the resolution of the AGM kernel and the
  /// asymptotic expansion in theta is exact to double precision.
  bool deep_tail() const noexcept;

  /// Exact text form: "x", "1-t" or "tail:theta", each with 17 digits.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts any decimal literal for x.
  static UnitArg parse(std::string_view text);

  friend bool operator==(const UnitArg& a, const UnitArg& b) noexcept {
    return a.x_ == b.x_ && a.xc_ == b.xc_ && a.theta_ == b.theta_;
  }
  /// Ordered by position in the interval.
  friend bool operator<(const UnitArg& a, const UnitArg& b) noexcept {
    return a.theta_ < b.theta_;
  }

 private:
  UnitArg(double x, double xc, double theta) : x_(x), xc_(xc), theta_(theta) {}
  static UnitArg anchored_small(double x);
  static UnitArg anchored_complement(double t);

  double x_;
  double xc_;
  double theta_;
};

/// Midpoint used by scan refinement: in x near 0, in 1 - x near 1 and in
/// theta in the deep tail.
UnitArg midpoint(const UnitArg& a, const UnitArg& b);

}  // namespace ellipconv
