#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/zeta.hpp"

namespace toric::cli {

using Json = nlohmann::json;  // std::map backed, so keys are emitted sorted

inline constexpr int kReportSchema = 1;
const char* software_version();

// Non-finite doubles become the strings "inf", "-inf", "nan".
Json number(double x);
Json rational(const Rational& x);
Json bigint(const BigInt& x);
Json ray_set(RaySet s);
Json constant_json(const ConstantReport& c);

// FNV-1a over the canonical dump of `inputs`.
std::string content_hash(const Json& inputs);
Json provenance(const Json& inputs, const std::vector<std::string>& notes);

std::string render_json(const Json& report);
// Emits report["rows"] as a table when present, else flattened key,value pairs.
std::string render_csv(const Json& report);

}  // namespace toric::cli
