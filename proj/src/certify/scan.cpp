#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <utility>

#include "ellipconv/certify.hpp"
#include "ellipconv/errors.hpp"

namespace ellipconv::certify {
namespace {

constexpr std::size_t kMaxRefineCandidates = 32;

struct Sample {
  UnitArg x;
  double value;
};

double evaluate(const ScalarFn& fn, const UnitArg& x) {
  try {
    return fn(x);
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(e.what(), x.to_string());
  }
}

void sort_unique(std::vector<UnitArg>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const UnitArg& a, const UnitArg& b) { return !(a < b) && !(b < a); }),
            pts.end());
}

void sort_unique(std::vector<Sample>& samples) {
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.x < b.x; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const Sample& a, const Sample& b) {
                              return !(a.x < b.x) && !(b.x < a.x);
                            }),
                samples.end());
}

// Indices of the (at most kMaxRefineCandidates) smallest scores below the
// threshold, ties broken by position.
std::vector<std::size_t> refine_candidates(const std::vector<double>& score, double threshold) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < score.size(); ++i) {
    if (score[i] < threshold) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  if (idx.size() > kMaxRefineCandidates) idx.resize(kMaxRefineCandidates);
  return idx;
}

void add_midpoint(const ScalarFn& fn, const Sample& a, const Sample& b,
                  std::vector<Sample>& out) {
  const UnitArg m = midpoint(a.x, b.x);
  if (!(a.x < m && m < b.x)) return;
  out.push_back({m, evaluate(fn, m)});
}

std::vector<Sample> sample_grid(const ScalarFn& fn, const ScanConfig& cfg) {
  std::vector<Sample> samples;
  for (const auto& x : scan_grid(cfg)) samples.push_back({x, evaluate(fn, x)});
  return samples;
}

}  // namespace

void ScanConfig::validate() const {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw DomainError("scan interval must satisfy 0 <= lo < hi <= 1");
  }
  if (n < 2) throw DomainError("scan grid needs n >= 2");
  if (!(endpoint_offset > 0.0 && endpoint_offset < 0.5)) {
    throw DomainError("endpoint offset must lie in (0, 1/2)");
  }
  if (refine_depth < 0 || endpoint_points < 0 || tail_points < 0) {
    throw DomainError("refine depth and point counts must be non-negative");
  }
  const double lo_eff = std::max(lo, endpoint_offset);
  const double hi_eff = std::min(hi, 1.0 - endpoint_offset);
  if (!(lo_eff < hi_eff)) throw DomainError("scan interval is empty after endpoint offsets");
  if (tail_points > 0 && !(tail_theta_max > -0.5 * std::log(endpoint_offset))) {
    throw DomainError("tail_theta_max must exceed theta(1 - endpoint_offset)");
  }
}

std::vector<UnitArg> scan_grid(const ScanConfig& cfg) {
  cfg.validate();
  const bool at_zero = cfg.lo <= cfg.endpoint_offset;
  const bool at_one = cfg.hi >= 1.0 - cfg.endpoint_offset;
  const double lo = at_zero ? cfg.endpoint_offset : cfg.lo;
  const double hi = at_one ? 1.0 - cfg.endpoint_offset : cfg.hi;
  const double step = (hi - lo) / (cfg.n - 1);

  std::vector<UnitArg> pts;
  pts.reserve(static_cast<std::size_t>(cfg.n + 2 * cfg.endpoint_points + cfg.tail_points));
  for (int i = 0; i < cfg.n; ++i) {
    if (i == cfg.n - 1 && at_one) {
      pts.push_back(UnitArg::from_complement(cfg.endpoint_offset));
    } else {
      pts.emplace_back(lo + step * i);
    }
  }

  if (cfg.endpoint_points > 0 && step > cfg.endpoint_offset) {
    const double ratio = std::pow(step / cfg.endpoint_offset, 1.0 / (cfg.endpoint_points + 1));
    double d = cfg.endpoint_offset;
    for (int k = 0; k < cfg.endpoint_points; ++k) {
      d *= ratio;
      if (at_zero) pts.emplace_back(d);
      if (at_one) pts.push_back(UnitArg::from_complement(d));
    }
  }

  if (cfg.tail_points > 0 && at_one) {
    const double theta0 = -0.5 * std::log(cfg.endpoint_offset);
    const double ratio = std::pow(cfg.tail_theta_max / theta0, 1.0 / cfg.tail_points);
    double theta = theta0;
    for (int k = 0; k < cfg.tail_points; ++k) {
      theta = k + 1 == cfg.tail_points ? cfg.tail_theta_max : theta * ratio;
      pts.push_back(UnitArg::from_log_complement(theta));
    }
  }

  sort_unique(pts);
  return pts;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::nonnegative: return "nonnegative";
    case Verdict::nonpositive: return "nonpositive";
    case Verdict::increasing: return "increasing";
    case Verdict::decreasing: return "decreasing";
    case Verdict::mixed: return "mixed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Sign s) {
  return s == Sign::nonnegative ? "nonnegative" : "nonpositive";
}

std::string_view to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

SignCertificate certify_sign(const ScalarFn& fn, Sign claimed, const ScanConfig& cfg) {
  const double orient = claimed == Sign::nonnegative ? 1.0 : -1.0;
  auto samples = sample_grid(fn, cfg);

  auto margin_of = [&](const std::vector<Sample>& s) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : s) {
      if (orient * p.value >= -kViolationTolerance) m = std::min(m, std::abs(p.value));
    }
    return m;
  };

  for (int level = 0; level < cfg.refine_depth; ++level) {
    const double margin = margin_of(samples);
    if (!std::isfinite(margin) || margin == 0.0) break;
    std::vector<double> score(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) score[i] = std::abs(samples[i].value);
    std::vector<Sample> extra;
    for (auto i : refine_candidates(score, 10.0 * margin)) {
      if (i > 0) add_midpoint(fn, samples[i - 1], samples[i], extra);
      if (i + 1 < samples.size()) add_midpoint(fn, samples[i], samples[i + 1], extra);
    }
    if (extra.empty()) break;
    samples.insert(samples.end(), extra.begin(), extra.end());
    sort_unique(samples);
  }

  SignCertificate cert;
  cert.evaluations = samples.size();
  bool non_finite = false;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (!std::isfinite(s.value)) {
      non_finite = true;
      continue;
    }
    if (orient * s.value < -kViolationTolerance) {
      if (!cert.witness_x) {
        cert.witness_x = s.x;
        cert.witness_value = s.value;
      }
    } else if (std::abs(s.value) < margin) {
      margin = std::abs(s.value);
      cert.margin_x = s.x;
    }
  }
  cert.min_abs_margin = std::isfinite(margin) ? margin : 0.0;
  if (cert.witness_x) {
    cert.verdict = Verdict::mixed;
  } else if (non_finite) {
    cert.verdict = Verdict::inconclusive;
  } else {
    cert.verdict = claimed == Sign::nonnegative ? Verdict::nonnegative : Verdict::nonpositive;
  }
  return cert;
}

SignCertificate certify_monotone(const ScalarFn& fn, Direction claimed, const ScanConfig& cfg) {
  const double orient = claimed == Direction::increasing ? 1.0 : -1.0;
  auto samples = sample_grid(fn, cfg);

  auto slack = [](const Sample& a, const Sample& b) {
    return kViolationTolerance * std::max({1.0, std::abs(a.value), std::abs(b.value)});
  };

  for (int level = 0; level < cfg.refine_depth; ++level) {
    std::vector<double> score(samples.size() - 1);
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const double d = samples[i + 1].value - samples[i].value;
      score[i] = std::abs(d);
      if (orient * d >= -slack(samples[i], samples[i + 1])) margin = std::min(margin, score[i]);
    }
    if (!std::isfinite(margin) || margin == 0.0) break;
    std::vector<Sample> extra;
    for (auto i : refine_candidates(score, 10.0 * margin)) {
      add_midpoint(fn, samples[i], samples[i + 1], extra);
    }
    if (extra.empty()) break;
    samples.insert(samples.end(), extra.begin(), extra.end());
    sort_unique(samples);
  }

  SignCertificate cert;
  cert.evaluations = samples.size();
  bool non_finite = false;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    if (!std::isfinite(a.value) || !std::isfinite(b.value)) {
      non_finite = true;
      continue;
    }
    const double d = b.value - a.value;
    if (orient * d < -slack(a, b)) {
      if (!cert.witness_x) {
        cert.witness_x = b.x;
        cert.witness_value = b.value;
        cert.witness_previous_x = a.x;
      }
    } else if (std::abs(d) < margin) {
      margin = std::abs(d);
      cert.margin_x = b.x;
    }
  }
  cert.min_abs_margin = std::isfinite(margin) ? margin : 0.0;
  if (cert.witness_x) {
    cert.verdict = Verdict::mixed;
  } else if (non_finite) {
    cert.verdict = Verdict::inconclusive;
  } else {
    cert.verdict =
        claimed == Direction::increasing ? Verdict::increasing : Verdict::decreasing;
  }
  return cert;
}

}  // namespace ellipconv::certify
