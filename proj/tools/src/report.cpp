#include "toric_cli/report.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace toric::cli {

#ifndef TORIC_VERSION
#define TORIC_VERSION "0.0.0"
#endif

const char* software_version() { return TORIC_VERSION; }

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json rational(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Json bigint(const BigInt& x) {
  if (x >= BigInt(INT64_MIN) && x <= BigInt(INT64_MAX)) return x.convert_to<std::int64_t>();
  if (x > 0 && x <= BigInt(UINT64_MAX)) return x.convert_to<std::uint64_t>();
  return x.str();
}

Json ray_set(RaySet s) { return members(s); }

Json constant_json(const ConstantReport& c) {
  Json b = Json::array();
  for (const auto& comp : c.breakdown)
    b.push_back({{"label", comp.label},
                 {"re", number(comp.value.real())},
                 {"im", number(comp.value.imag())},
                 {"tail_bound", number(comp.tail_bound)}});
  return {{"value", number(c.value)},
          {"imag", number(c.complex_value.imag())},
          {"E", c.E},
          {"tail_bound", number(c.tail_bound)},
          {"positive", c.positive()},
          {"breakdown", b},
          {"normalization_note", c.normalization_note},
          {"warnings", c.warnings}};
}

std::string content_hash(const Json& inputs) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : inputs.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json provenance(const Json& inputs, const std::vector<std::string>& notes) {
  return {{"software", "toric-count"},
          {"version", software_version()},
          {"report_schema", kReportSchema},
          {"spec_hash", content_hash(inputs)},
          {"normalization_notes", notes}};
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + cell(v[i]);
    return out;
  }
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::ostringstream& os) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << ',' << cell(v) << '\n';
  }
}

}  // namespace

std::string render_csv(const Json& report) {
  std::ostringstream os;
  if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty()) {
    const Json& rows = report["rows"];
    std::vector<std::string> cols;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? cell(r[cols[i]]) : "");
      os << '\n';
    }
    return os.str();
  }
  os << "key,value\n";
  flatten(report, "", os);
  return os.str();
}

}  // namespace toric::cli
