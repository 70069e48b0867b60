#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ellipconv/certify.hpp"
#include "json.hpp"

namespace ellipconv::cli {

enum class ExitCode : int { ok = 0, counterexample = 1, usage = 2, inconclusive = 3 };

enum class Format { json, csv, text };
std::string_view to_string(Format f);
Format parse_format(std::string_view s);

/// Everything needed to rerun a command.  Embedded in every output.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  certify::ScanConfig scan;
  Format output_format = Format::json;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

/// Finds the manifest in a previous output (JSON, CSV or text) or in a bare
/// manifest JSON document.
RunManifest manifest_from_artifact(std::string_view content);

/// Evaluates a parameter expression: numbers, + - * / ^, parentheses,
/// sqrt/log/exp, and the names pi, log4, sqrt2, a_c, p_logconcave,
/// p_monotone, p_convex_hi, p_concave_lo, a_recip_convex, a_recip_concave,
/// alpha.  a_c triggers a default find_a_c run.  Throws DomainError.
double eval_expr(std::string_view text);

/// A cell of a result table.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CommandResult {
  ExitCode exit_code = ExitCode::ok;
  Table table;
};

/// Runs the command described by a manifest.  Throws DomainError (and the
/// other library errors) on bad input.
CommandResult execute(const RunManifest& m);

/// Renders a result with its manifest in the manifest's output format.
std::string render(const RunManifest& m, const Table& t);

/// Full command line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellipconv::cli
