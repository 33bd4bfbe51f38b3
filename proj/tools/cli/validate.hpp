#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wedgeqed::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;  // measured deviation
  double tol = 0.0;
  bool pass = false;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" is not accepted here). Throws UsageError for
/// an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

/// Prints one line per check plus a per-suite summary; returns true iff all pass.
bool report(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace wedgeqed::cli
