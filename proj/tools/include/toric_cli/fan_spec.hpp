#pragma once

#include <optional>
#include <string>

#include "toric/curve_classes.hpp"
#include "toric/fan.hpp"

namespace toric::cli {

inline constexpr int kFanSpecSchema = 1;

struct FanSpec {
  int schema = kFanSpecSchema;
  std::string name;
  Fan fan;
  std::optional<CampanaWeights> weights;
  std::optional<RaySet> boundary;
  std::string source;
};

// Throws InputError("SpecSyntax") with "source:line" locations.
FanSpec parse_fan_spec(const std::string& text, const std::string& source = "<string>");
FanSpec load_fan_spec(const std::string& path);

// Throws InputError("InvalidFan") listing every problem found by validate_fan.
void require_valid_spec(const FanSpec& spec);

}  // namespace toric::cli
