#pragma once

#include <string>
#include <vector>

namespace circext {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // first failing check, or summary
};

struct ValidateOptions {
  std::vector<std::string> suites;  // empty = all
  bool inject_corrupt_table = false;  // test hook: breaks mu^ symmetry
};

/// Runs the per-module invariant batteries.  Names: measure, bessel,
/// operator, bounds, extremizer.
std::vector<SuiteResult> run_validation(const ValidateOptions& opts);

}  // namespace circext
