#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric::cli {

#ifndef TORIC_CORPUS_DIR
#define TORIC_CORPUS_DIR "data/fans"
#endif

struct SuiteOptions {
  int workers = 1;
  std::uint64_t ceiling = 100'000'000;
  std::string corpus_dir = TORIC_CORPUS_DIR;
};

enum class Status { Pass, Fail, ResourceGuard, InputFailure };

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::Fail;
  std::string detail;
  std::string table;  // canonical result table, compared across worker counts
};

const char* status_name(Status s);

CriterionResult run_criterion(int id, const SuiteOptions& opts);
// Criteria 1 to 8 in order.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

// One line per criterion: "[PASS] #1 title: detail".
std::string format_line(const CriterionResult& r);
// 0 all pass, 1 any mathematical failure, 2 input failure, 3 resource guard only.
int suite_exit_code(const std::vector<CriterionResult>& results);

}  // namespace toric::cli
