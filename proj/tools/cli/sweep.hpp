#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "output.hpp"

namespace wedgeqed::cli {

/// Evenly spaced grid; the last point is exactly `stop`.
struct SweepSpec {
  std::string variable;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;

  /// Throws UsageError unless start < stop and points >= 2.
  void check() const;
  std::vector<double> values() const;
};

/// Evaluates rows 0..n-1 on up to `jobs` threads; the result is in index
/// order whatever the completion order. If any row throws, the exception of
/// the lowest failing index is rethrown after all workers finish.
std::vector<Row> evaluate_rows(std::size_t n, int jobs, const std::function<Row(std::size_t)>& f);

}  // namespace wedgeqed::cli
