// Runs the acceptance criteria and prints one status line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "toric_cli/acceptance.hpp"

int main(int argc, char** argv) {
  toric::cli::SuiteOptions opts;
  for (int i = 1; i + 1 < argc; ++i) {
    std::string a = argv[i];
    if (a == "--workers") opts.workers = std::atoi(argv[++i]);
    else if (a == "--corpus") opts.corpus_dir = argv[++i];
  }
  auto results = toric::cli::run_suite(opts);
  for (const auto& r : results) std::cout << toric::cli::format_line(r) << "\n";
  return toric::cli::suite_exit_code(results);
}
