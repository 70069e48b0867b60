#include <cmath>

#include "ellipconv/certify.hpp"
#include "ellipconv/errors.hpp"

namespace ellipconv::certify {
namespace {

// Golden-section stops here; below this width w_plus is flat to rounding and
// the slope takes over.
constexpr double kGoldenWidth = 1e-5;
constexpr double kSlopeWidth = 1e-13;

}  // namespace

std::pair<double, double> golden_section_max(const std::function<double(double)>& fn, double lo,
                                             double hi, double width) {
  if (!(lo < hi)) throw DomainError("golden-section bracket must satisfy lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  while (hi - lo > width) {
    // >= keeps the left piece on ties.
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = fn(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = fn(d);
    }
  }
  return {lo, hi};
}

ExtremumResult find_a_c(const ScanConfig& cfg) {
  ScanConfig grid_cfg = cfg;
  grid_cfg.tail_points = 0;
  const auto grid = scan_grid(grid_cfg);

  ExtremumResult res;
  std::size_t best = 0;
  double best_value = -INFINITY;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double w = family::w_plus(grid[i]);
    if (w > best_value) {
      best_value = w;
      best = i;
    }
  }
  res.evaluations = grid.size();
  res.grid_max = best_value;
  res.conclusive = best > 0 && best + 1 < grid.size();
  if (!res.conclusive) {
    res.x_star = grid[best];
    res.value = best_value;
    res.tolerance = 0.0;
    return res;
  }

  std::size_t count = 0;
  auto w = [&](double x) {
    ++count;
    return family::w_plus(x);
  };
  auto [lo, hi] = golden_section_max(w, grid[best - 1].x(), grid[best + 1].x(), kGoldenWidth);

  if (family::w_plus_slope(lo) > 0.0 && family::w_plus_slope(hi) < 0.0) {
    while (hi - lo > kSlopeWidth) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      ++count;
      (family::w_plus_slope(mid) > 0.0 ? lo : hi) = mid;
    }
  } else {
    std::tie(lo, hi) = golden_section_max(w, lo, hi, 1e-10);
  }

  const double x_star = 0.5 * (lo + hi);
  res.x_star = UnitArg(x_star);
  res.value = std::max(family::w_plus(res.x_star), best_value);
  res.tolerance = hi - lo;
  res.evaluations += count + 1;
  return res;
}

family::CriticalConstants critical_constants(const ScanConfig& cfg) {
  auto c = family::CriticalConstants::algebraic();
  c.a_c = find_a_c(cfg).value;
  return c;
}

}  // namespace ellipconv::certify
