#pragma once

#include <stdexcept>
#include <string>

namespace wedgeqed {

/// An argument outside the mathematical or geometric domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request beyond what the implementation supports (order caps, values
/// that cannot be represented even in log space).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature or series that did not reach its tolerance. Carries the best
/// available estimate so callers can flag rather than drop the value.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double partial_value, double est_error)
      : std::runtime_error(what),
        partial_value_(partial_value),
        est_error_(est_error) {}

  double partial_value() const noexcept { return partial_value_; }
  double est_error() const noexcept { return est_error_; }

 private:
  double partial_value_;
  double est_error_;
};

}  // namespace wedgeqed
