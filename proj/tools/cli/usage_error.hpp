#pragma once

#include <stdexcept>

namespace wedgeqed::cli {

/// Bad flag combination or config file; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wedgeqed::cli
