#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/divisors.hpp"
#include "toric_cli/fan_spec.hpp"
#include "toric_cli/report.hpp"

namespace toric::cli {

struct JobSpec {
  std::string command;  // analyze | count | zeta | constants | verify
  std::string fan_path;
  std::optional<std::vector<long>> weights;
  std::optional<std::vector<int>> boundary;
  std::optional<std::vector<int>> face;
  std::vector<long> q{2};
  std::string bound = "4";
  int euler_degree = 8;
  std::string format = "json";
  int workers = 1;
  std::uint64_t ceiling = 100'000'000;
  std::string corpus;  // verify only; empty means the bundled corpus
};

// Throws InputError on inconsistent fields (face outside the boundary, bad q, negative bound).
void validate(const JobSpec& job);

// The fan spec with command-line overrides applied, validated.
FanSpec resolve_spec(const JobSpec& job);

// Constraint selection: --face gives A1 at that face, --boundary alone gives A1,
// otherwise weights (file or flag) give Campana, otherwise plain.
CountingConstraint resolve_constraint(const JobSpec& job, const FanSpec& spec);

struct CommandResult {
  Json report;
  int exit_code = 0;
};

CommandResult run_command(const JobSpec& job);
std::string render(const Json& report, const std::string& format);

Json cmd_analyze(const JobSpec& job);
Json cmd_count(const JobSpec& job);
Json cmd_zeta(const JobSpec& job);
Json cmd_constants(const JobSpec& job);
CommandResult cmd_verify(const JobSpec& job);

}  // namespace toric::cli
