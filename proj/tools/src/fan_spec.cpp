#include "toric_cli/fan_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric/errors.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  throw InputError("SpecSyntax", source + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int depth(const std::string& s) {
  int d = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '[' || c == '{') ++d;
    if (c == ']' || c == '}') --d;
  }
  return d;
}

template <class T>
T get_as(const json& v, const std::string& key, const std::string& source, int line) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    fail(source, line, "bad type for '" + key + "'");
  }
}

}  // namespace

FanSpec parse_fan_spec(const std::string& text, const std::string& source) {
  FanSpec spec;
  spec.source = source;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::optional<std::vector<std::vector<long>>> rays;
  std::optional<std::vector<std::vector<int>>> cones;
  std::optional<std::vector<long>> weights;
  std::optional<std::vector<int>> boundary;
  std::vector<std::string> seen;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const int start = lineno;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source, start, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    while (depth(value) > 0 && std::getline(in, raw)) {
      ++lineno;
      value += " " + trim(strip_comment(raw));
    }
    if (value.empty()) fail(source, start, "missing value for '" + key + "'");
    for (const auto& s : seen)
      if (s == key) fail(source, start, "duplicate key '" + key + "'");
    seen.push_back(key);
    json v;
    try {
      v = json::parse(value);
    } catch (const json::parse_error& e) {
      fail(source, start, "value of '" + key + "' is not valid JSON");
    }
    if (key == "schema") {
      spec.schema = get_as<int>(v, key, source, start);
      if (spec.schema != kFanSpecSchema) fail(source, start, "unsupported schema " + std::to_string(spec.schema));
    } else if (key == "name") {
      spec.name = get_as<std::string>(v, key, source, start);
    } else if (key == "rays") {
      rays = get_as<std::vector<std::vector<long>>>(v, key, source, start);
    } else if (key == "max_cones") {
      cones = get_as<std::vector<std::vector<int>>>(v, key, source, start);
    } else if (key == "weights") {
      weights = get_as<std::vector<long>>(v, key, source, start);
    } else if (key == "boundary_subset") {
      boundary = get_as<std::vector<int>>(v, key, source, start);
    } else {
      fail(source, start, "unknown key '" + key + "'");
    }
  }
  if (!rays) fail(source, lineno, "missing 'rays'");
  if (!cones) fail(source, lineno, "missing 'max_cones'");
  spec.fan = Fan(*rays, *cones, spec.name);
  if (weights) {
    if (weights->size() != rays->size()) fail(source, lineno, "'weights' must have one entry per ray");
    for (long m : *weights)
      if (m < 1) fail(source, lineno, "'weights' must be positive");
    spec.weights = CampanaWeights{*weights};
  }
  if (boundary) {
    for (int i : *boundary)
      if (i < 0 || i >= static_cast<int>(rays->size()))
        fail(source, lineno, "boundary index " + std::to_string(i) + " out of range");
    spec.boundary = make_set(*boundary);
  }
  return spec;
}

FanSpec load_fan_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("MissingFile", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fan_spec(ss.str(), path);
}

void require_valid_spec(const FanSpec& spec) {
  const FanDiagnostics d = validate_fan(spec.fan);
  if (d.ok()) return;
  std::string msg = spec.source + ":";
  for (const auto& p : d.problems) msg += " " + p + ";";
  msg.pop_back();
  throw InputError("InvalidFan", msg);
}

}  // namespace toric::cli
