#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <type_traits>
#include <variant>

#include "CLI11.hpp"
#include "ellipconv/certify.hpp"
#include "ellipconv/cli.hpp"
#include "ellipconv/constants.hpp"
#include "ellipconv/errors.hpp"
#include "ellipconv/family.hpp"
#include "ellipconv/inequalities.hpp"
#include "ellipconv/specfun.hpp"

namespace ellipconv::cli {
namespace {

using Params = std::map<std::string, std::string>;
using family::Endpoint;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------- parameters

std::optional<double> get_opt(const Params& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) return std::nullopt;
  return eval_expr(it->second);
}

double get(const Params& kv, const std::string& key) {
  if (auto v = get_opt(kv, key)) return *v;
  throw DomainError("missing parameter " + key + "=<value>");
}

double get_or(const Params& kv, const std::string& key, double fallback) {
  return get_opt(kv, key).value_or(fallback);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// A point of [0, 1] as typed on the command line.  0 and 1 select the
// endpoint extensions; everything else must be interior.
struct Point {
  std::string text;
  double raw;
  std::optional<UnitArg> arg;
  std::optional<Endpoint> end;
};

Point parse_point(const std::string& text) {
  Point pt{text, 0.0, std::nullopt, std::nullopt};
  if (text.starts_with("tail:") || text.starts_with("1-")) {
    try {
      pt.arg = UnitArg::parse(text);
      pt.raw = pt.arg->x();
      return pt;
    } catch (const DomainError&) {
      // not a plain complement literal; fall through to the expression parser
    }
  }
  pt.raw = eval_expr(text);
  if (pt.raw == 0.0) {
    pt.end = Endpoint::zero;
  } else if (pt.raw == 1.0) {
    pt.end = Endpoint::one;
  } else if (pt.raw > 0.0 && pt.raw < 1.0) {
    pt.arg = UnitArg(pt.raw);
  }
  return pt;
}

const UnitArg& interior(const Point& pt) {
  if (!pt.arg) throw DomainError("point outside (0, 1)");
  return *pt.arg;
}

using PointFn = std::function<double(const Point&)>;

// Wraps an interior-only function, optionally with endpoint values.
PointFn with_ends(std::function<double(const UnitArg&)> fn,
                  std::function<double(Endpoint)> ends = nullptr) {
  return [fn = std::move(fn), ends = std::move(ends)](const Point& pt) {
    if (pt.end) {
      if (!ends) throw DomainError("no endpoint value at x=" + pt.text);
      return ends(*pt.end);
    }
    return fn(interior(pt));
  };
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {
      "K",     "E",      "2F1",     "2F1_euler", "f",         "h",        "u",
      "v",     "delta",  "w_plus",  "w_minus",   "w_plus_slope", "g",     "phi",
      "phi_multiplier",  "G",       "J",         "L",         "dK",       "dE",
      "K_near_one",      "legendre"};
  return names;
}

PointFn lookup(const std::string& name, const Params& kv) {
  using namespace family;
  if (name == "K") {
    return with_ends([](const UnitArg& x) { return specfun::ellip_k(x); },
                     [](Endpoint e) {
                       if (e == Endpoint::one) throw DomainError("K diverges at x=1");
                       return specfun::ellip_k(0.0);
                     });
  }
  if (name == "E") {
    return with_ends([](const UnitArg& x) { return specfun::ellip_e(x); },
                     [](Endpoint e) { return specfun::ellip_e(e == Endpoint::one ? 1.0 : 0.0); });
  }
  if (name == "2F1" || name == "2F1_euler") {
    const specfun::HypParams hp{get(kv, "a"), get(kv, "b"), get(kv, "c")};
    const bool euler = name == "2F1_euler";
    return [hp, euler](const Point& pt) {
      return euler ? specfun::hyp2f1_euler(hp, pt.raw) : specfun::hyp2f1(hp, pt.raw);
    };
  }
  if (name == "f") {
    const LogShiftParam a{get(kv, "a")};
    return with_ends([a](const UnitArg& x) { return f(a, x); },
                     [a](Endpoint e) { return f(a, e); });
  }
  if (name == "g") {
    const LogShiftParam a{get(kv, "a")};
    return with_ends([a](const UnitArg& x) { return g_factor(a, x); });
  }
  if (name == "h") {
    const PowerParam p{get(kv, "p")};
    return with_ends([p](const UnitArg& x) { return h(p, x); });
  }
  if (name == "J") {
    const PowerParam p{get(kv, "p")};
    return with_ends([p](const UnitArg& x) { return j_factor(p, x); });
  }
  if (name == "L") {
    const PowerParam p{get(kv, "p")};
    return with_ends([p](const UnitArg& x) { return l_factor(p, x); });
  }
  if (name == "u") {
    return with_ends([](const UnitArg& x) { return u_aux(x); },
                     [](Endpoint e) { return u_aux(e); });
  }
  if (name == "v") {
    return with_ends([](const UnitArg& x) { return v_aux(x); },
                     [](Endpoint e) { return v_aux(e); });
  }
  if (name == "delta") {
    return with_ends([](const UnitArg& x) { return delta_aux(x); },
                     [](Endpoint e) { return delta_aux(e); });
  }
  if (name == "w_plus") {
    return with_ends([](const UnitArg& x) { return w_plus(x); },
                     [](Endpoint e) { return w_plus(e); });
  }
  if (name == "w_minus") return with_ends([](const UnitArg& x) { return w_minus(x); });
  if (name == "w_plus_slope") {
    return with_ends([](const UnitArg& x) { return w_plus_slope(x); });
  }
  if (name == "phi") {
    return with_ends([](const UnitArg& x) { return phi(x); },
                     [](Endpoint e) { return phi(e); });
  }
  if (name == "phi_multiplier") {
    return with_ends([](const UnitArg& x) { return phi_multiplier(x); });
  }
  if (name == "G") {
    return with_ends([](const UnitArg& x) { return curvature_g(x); },
                     [](Endpoint e) { return curvature_g(e); });
  }
  if (name == "dK") return with_ends([](const UnitArg& x) { return specfun::d_ellip_k(x); });
  if (name == "dE") return with_ends([](const UnitArg& x) { return specfun::d_ellip_e(x); });
  if (name == "K_near_one") {
    const double window = get_or(kv, "window", 0.9);
    return with_ends([window](const UnitArg& x) { return specfun::k_near_one(x, window); });
  }
  if (name == "legendre") {
    return with_ends([](const UnitArg& x) { return specfun::legendre_residual(x); });
  }
  throw DomainError("unknown function '" + name + "'; expected one of " +
                    join(function_names(), ' '));
}

// ---------------------------------------------------------------- commands

Cell text_or_null(const std::optional<UnitArg>& x) {
  if (!x) return std::monostate{};
  return x->to_string();
}

Cell value_or_null(const std::optional<double>& v) {
  if (!v) return std::monostate{};
  return *v;
}

CommandResult cmd_eval(const RunManifest& m) {
  const auto& kv = m.parameters;
  const auto fn = lookup(kv.at("fn"), kv);
  CommandResult res;
  res.table.columns = {"x", "value"};
  for (const auto& text : split(kv.count("x") ? kv.at("x") : "", ',')) {
    const Point pt = parse_point(text);
    double v;
    try {
      v = fn(pt);
    } catch (const EvaluationError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(e.what(), text);
    }
    res.table.rows.push_back({pt.arg ? Cell(pt.arg->to_string()) : Cell(text), v});
  }
  return res;
}

CommandResult cmd_constants(const RunManifest& m) {
  const auto ext = certify::find_a_c(m.scan);
  CommandResult res;
  res.exit_code = ext.conclusive ? ExitCode::ok : ExitCode::inconclusive;
  res.table.columns = {"name", "value", "provenance", "x_star", "tolerance"};
  auto row = [&](const char* name, double v, const char* prov) {
    res.table.rows.push_back({std::string(name), v, std::string(prov), std::monostate{},
                              std::monostate{}});
  };
  res.table.rows.push_back({std::string("a_c"), ext.value, std::string("computed"),
                            ext.x_star.x(), ext.tolerance});
  row("p_logconcave", constants::p_logconcave, "algebraic");
  row("p_convex_hi", constants::p_convex_hi, "algebraic");
  row("p_concave_lo", constants::p_concave_lo, "algebraic");
  row("p_monotone", constants::p_monotone, "algebraic");
  row("a_concave", constants::a_concave, "algebraic");
  row("a_recip_convex", constants::a_recip_convex, "algebraic");
  row("a_recip_concave", constants::a_recip_concave, "algebraic");
  row("alpha_lemma", constants::alpha_lemma, "algebraic");
  row("K(1/2)", specfun::ellip_k(0.5), "computed");
  row("gamma(1/4)", constants::gamma_quarter, "embedded");
  row("gamma(3/4)", constants::gamma_three_quarters, "embedded");
  return res;
}

double theorem_param(const Params& kv) {
  for (const char* key : {"a", "p", "param"}) {
    if (auto v = get_opt(kv, key)) return *v;
  }
  throw DomainError("missing parameter a=<value> or p=<value>");
}

CommandResult cmd_certify(const RunManifest& m) {
  const auto& kv = m.parameters;
  const std::string id = kv.at("theorem");
  CommandResult res;
  if (id == "find_a_c") {
    const auto r = certify::find_a_c(m.scan);
    res.exit_code = r.conclusive ? ExitCode::ok : ExitCode::inconclusive;
    res.table.columns = {"a_c",       "x_star",     "x_star_text", "tolerance",
                         "grid_max",  "conclusive", "evaluations"};
    res.table.rows.push_back({r.value, r.x_star.x(), r.x_star.to_string(), r.tolerance,
                              r.grid_max, r.conclusive,
                              static_cast<std::int64_t>(r.evaluations)});
    return res;
  }
  if (id == "find_x_p") {
    const family::PowerParam p{get(kv, "p")};
    const auto tp = certify::find_x_p(p, get_or(kv, "tol", 1e-12));
    const bool unique = certify::x_p_is_unique(p, tp.x);
    res.exit_code = unique ? ExitCode::ok : ExitCode::inconclusive;
    res.table.columns = {"p", "x_p", "x_p_text", "one_minus_x_p", "residual", "unique"};
    res.table.rows.push_back(
        {p.p, tp.x.x(), tp.x.to_string(), tp.x.complement(), tp.residual, unique});
    return res;
  }
  const auto c = certify::certify_theorem(id, theorem_param(kv), m.scan);
  const auto& cert = c.certificate;
  switch (cert.verdict) {
    case certify::Verdict::mixed: res.exit_code = ExitCode::counterexample; break;
    case certify::Verdict::inconclusive: res.exit_code = ExitCode::inconclusive; break;
    default: res.exit_code = ExitCode::ok;
  }
  res.table.columns = {"theorem",        "param",     "claim",       "verdict",
                       "witness_x",      "witness_value", "min_abs_margin", "margin_x",
                       "evaluations",    "x_p"};
  Cell x_p = std::monostate{};
  if (c.turning_point) x_p = c.turning_point->x.to_string();
  res.table.rows.push_back({c.id, c.param, c.claim, std::string(certify::to_string(cert.verdict)),
                            text_or_null(cert.witness_x), value_or_null(cert.witness_value),
                            cert.min_abs_margin, text_or_null(cert.margin_x),
                            static_cast<std::int64_t>(cert.evaluations), x_p});
  return res;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CommandResult cmd_verify(const RunManifest& m) {
  namespace iq = inequalities;
  const auto& kv = m.parameters;
  const std::string sel = kv.count("selector") ? kv.at("selector") : "all";
  std::vector<iq::InequalityReport> reports;
  if (sel == "all") {
    reports = iq::run_all(m.scan, m.seed);
  } else if (sel == "sum-bounds") {
    reports.push_back(iq::check_sum_bounds({get_or(kv, "a", 1.47)}, m.scan));
  } else if (sel == "weighted-sum") {
    reports.push_back(iq::check_weighted_sum({get_or(kv, "p", constants::p_convex_hi)}, m.scan));
  } else if (sel == "product-pair") {
    reports.push_back(iq::check_product_pair({get_or(kv, "p", 0.5)}, m.scan));
  } else if (sel == "mean-chain") {
    const family::PowerParam p{get_or(kv, "p", 0.5)};
    if (kv.count("x") || kv.count("y")) {
      reports.push_back(iq::check_mean_chain(p, interior(parse_point(kv.at("x"))),
                                             interior(parse_point(kv.at("y")))));
    } else {
      const auto pairs = static_cast<std::size_t>(get_or(kv, "pairs", 1000));
      reports.push_back(iq::check_mean_chain_random(p, pairs, m.seed));
    }
  } else if (sel == "k-envelope") {
    reports.push_back(iq::check_k_envelope({get_or(kv, "p", 0.25)}, m.scan));
  } else if (sel == "gamma-constants") {
    reports.push_back(iq::check_gamma_constant_identities({get_or(kv, "p", 0.25)}, m.scan));
  } else {
    throw DomainError("unknown check '" + sel + "'; expected all or one of " +
                      join(iq::check_names(), ' '));
  }

  CommandResult res;
  res.table.columns = {"check",         "param",           "verdict",      "claim_applies",
                       "grid_n",        "clause",          "relation",     "applies",
                       "strict",        "max_lhs_minus_rhs", "argmax_x",   "strict_confirmed",
                       "clause_passed", "equality_points", "witness_clause", "witness_x",
                       "witness_y",     "witness_gap",     "extras"};
  for (const auto& r : reports) {
    if (!r.passed()) res.exit_code = ExitCode::counterexample;
    std::vector<std::string> eq;
    for (double e : r.equality_points) eq.push_back(format_g17(e));
    std::vector<std::string> extras;
    for (const auto& [k, v] : r.extras) extras.push_back(k + "=" + format_g17(v));
    for (const auto& c : r.clauses) {
      std::vector<Cell> row = {r.name,
                               r.param,
                               std::string(iq::to_string(r.verdict)),
                               r.claim_applies,
                               static_cast<std::int64_t>(r.grid_n),
                               c.name,
                               c.relation,
                               c.applies,
                               c.strict,
                               c.max_lhs_minus_rhs,
                               text_or_null(c.argmax),
                               c.strict_confirmed,
                               c.passed,
                               join(eq, ';'),
                               std::monostate{},
                               std::monostate{},
                               std::monostate{},
                               std::monostate{},
                               join(extras, ';')};
      if (r.witness) {
        row[14] = r.witness->clause;
        row[15] = r.witness->x.to_string();
        row[16] = text_or_null(r.witness->y);
        row[17] = r.witness->lhs_minus_rhs;
      }
      res.table.rows.push_back(std::move(row));
    }
  }
  return res;
}

CommandResult cmd_table(const RunManifest& m) {
  const auto& kv = m.parameters;
  const auto fn = lookup(kv.at("fn"), kv);
  const std::string spacing = kv.count("spacing") ? kv.at("spacing") : "uniform";
  std::vector<UnitArg> pts;
  if (spacing == "uniform") {
    pts = certify::scan_grid(m.scan);
  } else if (spacing == "geometric") {
    auto cfg = m.scan;
    cfg.validate();
    const double lo = std::max(cfg.lo, cfg.endpoint_offset);
    const UnitArg a(lo);
    const UnitArg b = cfg.hi >= 1.0 - cfg.endpoint_offset
                          ? UnitArg::from_complement(cfg.endpoint_offset)
                          : UnitArg(cfg.hi);
    for (int i = 0; i < cfg.n; ++i) {
      const double t = static_cast<double>(i) / (cfg.n - 1);
      pts.push_back(UnitArg::from_logit(a.logit() + t * (b.logit() - a.logit())));
    }
  } else {
    throw DomainError("spacing must be uniform or geometric");
  }
  CommandResult res;
  res.table.columns = {"x", "value"};
  for (const auto& x : pts) {
    Point pt{x.to_string(), x.x(), x, std::nullopt};
    res.table.rows.push_back({x.x(), fn(pt)});
  }
  return res;
}

// ---------------------------------------------------------------- rendering

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c, int digits) {
  return std::visit(
      [digits](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.*g", digits, v);
          return buf;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

ojson cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

CommandResult execute(const RunManifest& m) {
  if (m.command == "eval") return cmd_eval(m);
  if (m.command == "constants") return cmd_constants(m);
  if (m.command == "certify") return cmd_certify(m);
  if (m.command == "verify") return cmd_verify(m);
  if (m.command == "table") return cmd_table(m);
  throw DomainError("unknown command '" + m.command + "'");
}

std::string render(const RunManifest& m, const Table& t) {
  const std::string manifest_line = "# manifest: " + m.to_json().dump() + "\n";
  std::string out;
  switch (m.output_format) {
    case Format::json: {
      ojson doc;
      doc["manifest"] = ojson::parse(m.to_json().dump());
      doc["results"] = ojson::array();
      for (const auto& row : t.rows) {
        ojson obj = ojson::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        doc["results"].push_back(std::move(obj));
      }
      out = doc.dump(2) + "\n";
      break;
    }
    case Format::csv: {
      out = manifest_line;
      std::vector<std::string> header;
      for (const auto& c : t.columns) header.push_back(csv_escape(c));
      out += join(header, ',') + "\n";
      for (const auto& row : t.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += ',';
          line += csv_escape(cell_text(row[i], 17));
        }
        out += line + "\n";
      }
      break;
    }
    case Format::text: {
      out = manifest_line;
      std::vector<std::vector<std::string>> cells;
      cells.push_back(t.columns);
      for (const auto& row : t.rows) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(cell_text(c, 12));
        cells.push_back(std::move(r));
      }
      std::vector<std::size_t> width(t.columns.size(), 0);
      for (const auto& r : cells) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      }
      for (const auto& r : cells) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) line += "  ";
          line += r[i];
          if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
        }
        out += line + "\n";
      }
      break;
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete elliptic integrals and convexity certificates", "ellipconv"};
  app.require_subcommand(1);

  struct Common {
    std::optional<int> grid_n;
    std::optional<double> lo;
    std::optional<double> hi;
    std::optional<double> offset;
    std::optional<int> refine;
    std::optional<int> tail;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string out_path;
    std::vector<std::string> positional;
  } opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--grid-n", opt.grid_n, "Uniform grid size");
    sub->add_option("--lo", opt.lo, "Scan interval lower end");
    sub->add_option("--hi", opt.hi, "Scan interval upper end");
    sub->add_option("--offset", opt.offset, "Distance kept from 0 and 1");
    sub->add_option("--refine", opt.refine, "Refinement levels");
    sub->add_option("--tail", opt.tail, "Extra points in theta = -log(1-x)/2 beyond 1 - offset");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", opt.seed, "Seed for random-pair checks");
    sub->add_option("--out", opt.out_path, "Write output to this file");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a function: eval <fn> [key=value...] <x>...");
  auto* consts = app.add_subcommand("constants", "Critical constants");
  auto* cert = app.add_subcommand(
      "certify", "Certify a sign claim: certify <theorem-id|find_a_c|find_x_p> [a=..|p=..]");
  auto* verify = app.add_subcommand("verify", "Check inequalities: verify <check|all> [key=value...]");
  auto* table = app.add_subcommand("table", "Tabulate a function on a grid: table <fn> [key=value...]");
  auto* replay = app.add_subcommand("replay", "Rerun the manifest embedded in an output file");
  for (auto* sub : {eval, consts, cert, verify, table, replay}) add_common(sub);
  for (auto* sub : {eval, cert, verify, table}) {
    sub->add_option("args", opt.positional, "Positional arguments and key=value parameters");
  }
  std::string replay_path;
  replay->add_option("manifest", replay_path, "JSON, CSV or text output of an earlier run")
      ->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    RunManifest m;
    if (replay->parsed()) {
      std::ifstream in(replay_path, std::ios::binary);
      if (!in) throw DomainError("cannot read " + replay_path);
      std::stringstream buf;
      buf << in.rdbuf();
      m = manifest_from_artifact(buf.str());
    } else {
      CLI::App* sub = app.get_subcommands().front();
      m.command = sub->get_name();
      std::vector<std::string> plain;
      for (const auto& a : opt.positional) {
        const auto eq = a.find('=');
        if (eq != std::string::npos && eq > 0) {
          m.parameters[a.substr(0, eq)] = a.substr(eq + 1);
        } else {
          plain.push_back(a);
        }
      }
      auto take_first = [&](const char* key, bool required) {
        if (plain.empty()) {
          if (required) throw DomainError(m.command + " needs a " + key + " argument");
          return;
        }
        m.parameters[key] = plain.front();
        plain.erase(plain.begin());
      };
      if (m.command == "eval") {
        take_first("fn", true);
        if (plain.empty()) throw DomainError("eval needs at least one x value");
        m.parameters["x"] = join(plain, ',');
        plain.clear();
      } else if (m.command == "certify") {
        take_first("theorem", true);
        const auto& id = m.parameters["theorem"];
        const auto& ids = certify::theorem_ids();
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
          m.scan = certify::theorem_scan_config();
        }
      } else if (m.command == "verify") {
        take_first("selector", false);
      } else if (m.command == "table") {
        take_first("fn", true);
        m.scan.endpoint_points = 0;
        m.scan.n = 1000;
        if (auto it = m.parameters.find("n"); it != m.parameters.end()) {
          m.scan.n = static_cast<int>(eval_expr(it->second));
        }
      }
      if (!plain.empty()) throw DomainError("unexpected argument '" + plain.front() + "'");
      if (opt.grid_n) m.scan.n = *opt.grid_n;
      if (opt.lo) m.scan.lo = *opt.lo;
      if (opt.hi) m.scan.hi = *opt.hi;
      if (opt.offset) m.scan.endpoint_offset = *opt.offset;
      if (opt.refine) m.scan.refine_depth = *opt.refine;
      if (opt.tail) m.scan.tail_points = *opt.tail;
      m.scan.validate();
      m.output_format = parse_format(opt.format);
      m.seed = opt.seed;
    }

    const auto res = execute(m);
    const std::string text = render(m, res.table);
    if (!opt.out_path.empty()) {
      std::ofstream f(opt.out_path, std::ios::binary);
      if (!f) throw DomainError("cannot write " + opt.out_path);
      f << text;
    } else {
      out << text;
    }
    return static_cast<int>(res.exit_code);
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::inconclusive);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}

}  // namespace ellipconv::cli
