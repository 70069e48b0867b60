#include "ellipconv/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "ellipconv/constants.hpp"
#include "ellipconv/errors.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::inequalities {
namespace {

using constants::pi;
using family::LogShiftParam;
using family::PowerParam;

struct Clause {
  std::string name;
  std::string relation;
  bool strict;
  bool applies;
  std::function<double(const UnitArg&)> gap;
};

struct PairClause {
  std::string name;
  std::string relation;
  bool applies;
  std::function<double(const UnitArg&, const UnitArg&)> gap;
};

double k_half() { return specfun::ellip_k(0.5); }

std::vector<UnitArg> default_points(const certify::ScanConfig& cfg) {
  auto pts = certify::scan_grid(cfg);
  const UnitArg half(0.5);
  if (cfg.lo < 0.5 && cfg.hi > 0.5 && !std::binary_search(pts.begin(), pts.end(), half)) {
    pts.insert(std::upper_bound(pts.begin(), pts.end(), half), half);
  }
  return pts;
}

std::vector<double> cluster(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts) {
    if (out.empty() || p - out.back() > kClusterTolerance) out.push_back(p);
  }
  return out;
}

bool counts(const ClauseResult& c, bool exploratory) { return exploratory || c.applies; }

void finalize(InequalityReport& rep) {
  rep.claim_applies = std::any_of(rep.clauses.begin(), rep.clauses.end(),
                                  [](const ClauseResult& c) { return c.applies; });
  rep.verdict = Verdict::pass;
  for (const auto& c : rep.clauses) {
    if (counts(c, !rep.claim_applies) && !c.passed) rep.verdict = Verdict::fail;
  }
  if (rep.verdict == Verdict::pass) rep.witness.reset();
}

InequalityReport grid_check(std::string name, double param, const std::vector<Clause>& clauses,
                            const std::vector<UnitArg>& pts, double dom_lo = 0.0,
                            double dom_hi = 1.0) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.param = param;
  rep.grid_n = pts.size();
  const bool exploratory = std::none_of(clauses.begin(), clauses.end(),
                                        [](const Clause& c) { return c.applies; });

  std::vector<std::vector<double>> gaps(clauses.size(), std::vector<double>(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < clauses.size(); ++i) gaps[i][j] = clauses[i].gap(pts[j]);
  }

  std::vector<double> eq;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].strict || !(clauses[i].applies || exploratory)) continue;
    std::size_t j = 0;
    while (j < pts.size()) {
      if (std::abs(gaps[i][j]) > kEqualityTolerance) {
        ++j;
        continue;
      }
      std::size_t best = j;
      for (; j < pts.size() && std::abs(gaps[i][j]) <= kEqualityTolerance; ++j) {
        if (std::abs(gaps[i][j]) < std::abs(gaps[i][best])) best = j;
      }
      eq.push_back(pts[best].x());
    }
  }
  rep.equality_points = cluster(eq);

  auto guarded = [&](double r) {
    if (r - dom_lo < kStrictnessGuard || dom_hi - r < kStrictnessGuard) return false;
    return std::none_of(rep.equality_points.begin(), rep.equality_points.end(),
                        [r](double e) { return std::abs(r - e) <= kStrictnessGuard; });
  };

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    ClauseResult c;
    c.name = clauses[i].name;
    c.relation = clauses[i].relation;
    c.strict = clauses[i].strict;
    c.applies = clauses[i].applies;
    std::optional<std::size_t> first_violation;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double g = gaps[i][j];
      if (!(g <= c.max_lhs_minus_rhs)) {
        c.max_lhs_minus_rhs = g;
        c.argmax = pts[j];
      }
      if (!(g <= c.tolerance) && !first_violation) first_violation = j;
      if (!(g < 0.0) && guarded(pts[j].x())) c.strict_confirmed = false;
    }
    c.passed = !first_violation;
    if (first_violation && counts(c, exploratory) && !rep.witness) {
      rep.witness = Witness{c.name, pts[*first_violation], std::nullopt, gaps[i][*first_violation]};
    }
    rep.clauses.push_back(std::move(c));
  }
  finalize(rep);
  return rep;
}

InequalityReport pair_check(std::string name, double param,
                            const std::vector<PairClause>& clauses,
                            const std::vector<std::pair<UnitArg, UnitArg>>& pairs) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.param = param;
  rep.grid_n = pairs.size();
  const bool exploratory = std::none_of(clauses.begin(), clauses.end(),
                                        [](const PairClause& c) { return c.applies; });
  std::vector<double> eq;
  for (const auto& [x, y] : pairs) {
    if (x == y) eq.push_back(x.x());
  }
  rep.equality_points = cluster(eq);

  for (const auto& cl : clauses) {
    ClauseResult c;
    c.name = cl.name;
    c.relation = cl.relation;
    c.applies = cl.applies;
    for (const auto& [x, y] : pairs) {
      const double g = cl.gap(x, y);
      if (!(g <= c.max_lhs_minus_rhs)) {
        c.max_lhs_minus_rhs = g;
        c.argmax = x;
      }
      if (!(g <= c.tolerance)) {
        if (c.passed && counts(c, exploratory) && !rep.witness) {
          rep.witness = Witness{c.name, x, y, g};
        }
        c.passed = false;
      }
      const bool away = std::abs(x.x() - y.x()) > kStrictnessGuard &&
                        std::min(x.x(), y.x()) >= kStrictnessGuard &&
                        std::max(x.x(), y.x()) <= 1.0 - kStrictnessGuard;
      if (away && !(g < 0.0)) c.strict_confirmed = false;
    }
    rep.clauses.push_back(std::move(c));
  }
  finalize(rep);
  return rep;
}

std::vector<PairClause> mean_chain_clauses(PowerParam p) {
  auto h = [p](const UnitArg& x) { return family::h(p, x); };
  return {
      {"geometric", "sqrt(h(x)h(y)) <= h((x+y)/2)", p.p >= constants::p_logconcave,
       [h](const UnitArg& x, const UnitArg& y) {
         return std::sqrt(h(x) * h(y)) - h(midpoint(x, y));
       }},
      {"arithmetic", "(h(x)+h(y))/2 <= h((x+y)/2)",
       p.p >= constants::p_concave_lo && p.p <= 1.0,
       [h](const UnitArg& x, const UnitArg& y) {
         return 0.5 * (h(x) + h(y)) - h(midpoint(x, y));
       }},
      {"monotone", "h((x+y)/2) <= h(sqrt(xy))", p.p >= constants::p_monotone,
       [h](const UnitArg& x, const UnitArg& y) {
         return h(midpoint(x, y)) - h(UnitArg(std::sqrt(x.x() * y.x())));
       }},
  };
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

double sum_f(LogShiftParam a, const UnitArg& r) {
  return family::f(a, r) + family::f(a, r.swapped());
}

double weighted_sum(PowerParam p, const UnitArg& r) {
  return family::h(p, r) + family::h(p, r.swapped());
}

double crossed_sum(PowerParam p, const UnitArg& r) {
  const UnitArg s = r.swapped();
  return std::pow(r.complement(), p.p) * specfun::ellip_k(s) +
         std::pow(r.x(), p.p) * specfun::ellip_k(r);
}

double geometric_product(PowerParam p, const UnitArg& r) {
  return std::sqrt(family::h(p, r) * family::h(p, r.swapped()));
}

InequalityReport check_sum_bounds(LogShiftParam a, const certify::ScanConfig& cfg) {
  const double a_c = certify::find_a_c(cfg).value;
  const bool claimed = a.a >= a_c;
  const double lower = 4.0 * k_half() / (2.0 * a.a + std::log(2.0));
  const double upper = 1.0 + pi / (2.0 * a.a);
  std::vector<Clause> clauses = {
      {"lower", "4K(1/2)/(2a+log 2) <= H_a(r)", false, claimed,
       [=](const UnitArg& r) { return lower - sum_f(a, r); }},
      {"upper", "H_a(r) < 1+pi/(2a)", true, claimed,
       [=](const UnitArg& r) { return sum_f(a, r) - upper; }},
  };
  auto rep = grid_check("sum-bounds", a.a, clauses, default_points(cfg));
  rep.extras.emplace_back("a_c", a_c);
  return rep;
}

InequalityReport check_weighted_sum(PowerParam p, const certify::ScanConfig& cfg) {
  const bool forward = p.p >= constants::p_convex_hi;
  const bool reversed = p.p >= constants::p_concave_lo && p.p <= 1.0;
  const double mid = k_half() / std::pow(2.0, p.p - 1.0);
  std::vector<Clause> clauses;
  if (reversed) {
    clauses = {
        {"upper", "S_p(r) <= K(1/2)/2^(p-1)", false, true,
         [=](const UnitArg& r) { return weighted_sum(p, r) - mid; }},
        {"lower", "pi/2 < S_p(r)", true, true,
         [=](const UnitArg& r) { return 0.5 * pi - weighted_sum(p, r); }},
    };
  } else {
    clauses = {
        {"lower", "K(1/2)/2^(p-1) <= S_p(r)", false, forward,
         [=](const UnitArg& r) { return mid - weighted_sum(p, r); }},
        {"upper", "S_p(r) < pi/2", true, forward,
         [=](const UnitArg& r) { return weighted_sum(p, r) - 0.5 * pi; }},
    };
  }
  return grid_check("weighted-sum", p.p, clauses, default_points(cfg));
}

InequalityReport check_product_pair(PowerParam p, const certify::ScanConfig& cfg) {
  const double kh = k_half();
  std::vector<Clause> clauses = {
      {"sum", "2^(1+p)K(1/2)(r-r^2)^p <= (1-r)^p K(1-r) + r^p K(r)", false, p.p >= 0.0,
       [=](const UnitArg& r) {
         return std::pow(2.0, 1.0 + p.p) * kh * std::pow(r.x() * r.complement(), p.p) -
                crossed_sum(p, r);
       }},
      {"product", "sqrt((r-r^2)^p K(1-r)K(r)) <= K(1/2)/2^p", false,
       p.p >= constants::p_logconcave,
       [=](const UnitArg& r) { return geometric_product(p, r) - kh / std::pow(2.0, p.p); }},
  };
  return grid_check("product-pair", p.p, clauses, default_points(cfg));
}

InequalityReport check_mean_chain(PowerParam p, const UnitArg& x, const UnitArg& y) {
  return pair_check("mean-chain", p.p, mean_chain_clauses(p), {{x, y}});
}

InequalityReport check_mean_chain_random(PowerParam p, std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  auto draw = [&] {
    double v = 0.0;
    while (!(v > 0.0)) v = dist(rng);
    return UnitArg(v);
  };
  std::vector<std::pair<UnitArg, UnitArg>> xs;
  xs.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const UnitArg x = draw();
    const UnitArg y = draw();
    xs.emplace_back(x, y);
  }
  return pair_check("mean-chain", p.p, mean_chain_clauses(p), xs);
}

InequalityReport check_k_envelope(PowerParam p, const certify::ScanConfig& cfg) {
  if (p.p > 0.0 && p.p < constants::p_monotone) {
    const auto tp = certify::find_x_p(p);
    const UnitArg x_p = tp.x;
    const double cap = family::h(p, x_p);
    std::vector<UnitArg> pts;
    for (const auto& r : certify::scan_grid(cfg)) {
      if (r < x_p) pts.push_back(r);
    }
    std::vector<Clause> clauses = {
        {"lower", "pi/(2(1-r)^p) < K(r)", true, true,
         [=](const UnitArg& r) {
           return 0.5 * pi * std::exp(2.0 * p.p * r.theta()) - specfun::ellip_k(r);
         }},
        {"upper", "K(r) < h_p(x_p)/(1-r)^p", true, true,
         [=](const UnitArg& r) {
           return specfun::ellip_k(r) - cap * std::exp(2.0 * p.p * r.theta());
         }},
    };
    auto rep = grid_check("k-envelope", p.p, clauses, pts, 0.0, x_p.x());
    rep.extras.emplace_back("x_p", x_p.x());
    rep.extras.emplace_back("1-x_p", x_p.complement());
    return rep;
  }
  const bool claimed = p.p >= constants::p_monotone;
  std::vector<Clause> clauses = {
      {"lower", "(pi/2)(1-r)^p < K(r)", true, claimed,
       [=](const UnitArg& r) {
         return 0.5 * pi * std::exp(-2.0 * p.p * r.theta()) - specfun::ellip_k(r);
       }},
      {"upper", "K(r) < pi/(2(1-r)^p)", true, claimed,
       [=](const UnitArg& r) {
         return specfun::ellip_k(r) - 0.5 * pi * std::exp(2.0 * p.p * r.theta());
       }},
  };
  return grid_check("k-envelope", p.p, clauses, certify::scan_grid(cfg));
}

InequalityReport check_gamma_constant_identities(PowerParam p, const certify::ScanConfig& cfg) {
  using constants::gamma_quarter;
  using constants::gamma_three_quarters;
  const double kh = k_half();
  const double g4 = std::pow(gamma_quarter, 4);
  const double alpha = g4 / (std::pow(2.0, 2.0 + 2.0 * p.p) * pi);
  const bool claimed = p.p >= 0.25 && p.p <= 1.0;

  std::vector<Clause> chain = {
      {"chain-lower", "4K(x)K(1-x)(x-x^2)^p <= S_p(x)^2", false, claimed,
       [=](const UnitArg& x) {
         const double s = weighted_sum(p, x);
         return 4.0 * family::h(p, x) * family::h(p, x.swapped()) - s * s;
       }},
      {"chain-upper", "S_p(x)^2 <= alpha_p", false, claimed,
       [=](const UnitArg& x) {
         const double s = weighted_sum(p, x);
         return s * s - alpha;
       }},
  };
  auto rep = grid_check("gamma-constants", p.p, chain, default_points(cfg));

  auto identity = [](std::string name, std::string relation, double err, double tol) {
    ClauseResult c;
    c.name = std::move(name);
    c.relation = std::move(relation);
    c.tolerance = tol;
    c.max_lhs_minus_rhs = err;
    c.passed = err <= tol;
    return c;
  };
  const double closed = pi * std::sqrt(pi) / (2.0 * gamma_three_quarters * gamma_three_quarters);
  const double alpha_from_k = std::pow(2.0 * kh / std::pow(2.0, p.p), 2);
  std::vector<ClauseResult> ids = {
      identity("k-half", "|K(1/2) / (pi sqrt(pi)/(2 Gamma(3/4)^2)) - 1|",
               std::abs(kh / closed - 1.0), 1e-12),
      identity("k-half-squared", "|K(1/2)^2 / (Gamma(1/4)^4/(16 pi)) - 1|",
               std::abs(kh * kh / (g4 / (16.0 * pi)) - 1.0), 1e-12),
      identity("alpha", "|(2K(1/2)/2^p)^2 / alpha_p - 1|", std::abs(alpha_from_k / alpha - 1.0),
               1e-12),
      identity("reflection", "|Gamma(1/4) Gamma(3/4) - pi sqrt 2|",
               std::abs(gamma_quarter * gamma_three_quarters - pi * constants::sqrt2), 1e-13),
  };
  for (const auto& c : ids) {
    if (!c.passed && !rep.witness) {
      rep.witness = Witness{c.name, UnitArg(0.5), std::nullopt, c.max_lhs_minus_rhs};
    }
  }
  rep.clauses.insert(rep.clauses.begin(), ids.begin(), ids.end());
  finalize(rep);
  rep.extras.emplace_back("alpha_p", alpha);
  return rep;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"sum-bounds", "weighted-sum", "product-pair",
                                                 "mean-chain", "k-envelope", "gamma-constants"};
  return names;
}

std::vector<InequalityReport> run_all(const certify::ScanConfig& cfg, std::uint64_t seed) {
  std::vector<InequalityReport> out;
  out.push_back(check_sum_bounds({1.47}, cfg));
  out.push_back(check_weighted_sum({constants::p_convex_hi}, cfg));
  out.push_back(check_weighted_sum({0.5}, cfg));
  out.push_back(check_product_pair({0.5}, cfg));
  out.push_back(check_mean_chain_random({0.5}, 1000, seed));
  out.push_back(check_k_envelope({0.25}, cfg));
  out.push_back(check_k_envelope({0.1}, cfg));
  out.push_back(check_gamma_constant_identities({0.25}, cfg));
  return out;
}

}  // namespace ellipconv::inequalities
