#pragma once

#include <functional>
#include <optional>

namespace wedgeqed::quad {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_panels = 2000;
  /// When set, the initial panels are no wider than half this period.
  std::optional<double> oscillation_period_hint;
};

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod 7/15 over [a, b] with global bisection of the worst
/// panel. b < a gives the negated integral. A NaN from f throws NumericError;
/// running out of panels returns converged = false with the best estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Throws DomainError unless tolerances are positive and max_panels >= 8.
void validate(const QuadratureSpec& spec);

}  // namespace wedgeqed::quad
