#include <string>

#include "ellipconv/cli.hpp"
#include "ellipconv/errors.hpp"

namespace ellipconv::cli {
namespace {

constexpr std::string_view kManifestPrefix = "# manifest: ";

template <typename T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : it->get<T>();
}

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "json";
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown output format '" + std::string(s) + "'");
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["scan"] = {{"lo", scan.lo},
               {"hi", scan.hi},
               {"n", scan.n},
               {"endpoint_offset", scan.endpoint_offset},
               {"refine_depth", scan.refine_depth},
               {"endpoint_points", scan.endpoint_points},
               {"tail_points", scan.tail_points},
               {"tail_theta_max", scan.tail_theta_max}};
  j["output_format"] = std::string(to_string(output_format));
  j["seed"] = seed;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = field(j, "parameters", std::map<std::string, std::string>{});
    if (auto it = j.find("scan"); it != j.end()) {
      const auto& s = *it;
      m.scan.lo = field(s, "lo", m.scan.lo);
      m.scan.hi = field(s, "hi", m.scan.hi);
      m.scan.n = field(s, "n", m.scan.n);
      m.scan.endpoint_offset = field(s, "endpoint_offset", m.scan.endpoint_offset);
      m.scan.refine_depth = field(s, "refine_depth", m.scan.refine_depth);
      m.scan.endpoint_points = field(s, "endpoint_points", m.scan.endpoint_points);
      m.scan.tail_points = field(s, "tail_points", m.scan.tail_points);
      m.scan.tail_theta_max = field(s, "tail_theta_max", m.scan.tail_theta_max);
    }
    m.output_format = parse_format(field(j, "output_format", std::string("json")));
    m.seed = field(j, "seed", std::uint64_t{0});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed manifest: ") + e.what());
  }
}

RunManifest manifest_from_artifact(std::string_view content) {
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    const auto line = content.substr(pos, end - pos);
    if (line.starts_with(kManifestPrefix)) {
      auto j = nlohmann::json::parse(line.substr(kManifestPrefix.size()), nullptr, false);
      if (j.is_discarded()) throw DomainError("manifest line is not valid JSON");
      return RunManifest::from_json(j);
    }
    pos = end + 1;
  }
  auto j = nlohmann::json::parse(content, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw DomainError("no manifest found in artifact");
  if (auto it = j.find("manifest"); it != j.end()) return RunManifest::from_json(*it);
  return RunManifest::from_json(j);
}

}  // namespace ellipconv::cli
