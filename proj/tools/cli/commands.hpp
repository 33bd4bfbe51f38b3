#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wedgeqed::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kNotConverged = 4,
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "WEDGEQED_OUT_DIR";

/// Runs the tool on `args` (without the program name). Table output goes to
/// `out` unless redirected to a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wedgeqed::cli
