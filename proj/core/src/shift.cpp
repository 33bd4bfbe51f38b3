#include "wedgeqed/shift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wedgeqed/errors.hpp"

namespace wedgeqed::shift {

ShiftParams ShiftParams::with_cutoff(double cutoff) {
  if (!std::isfinite(cutoff) || !(cutoff > 1.0)) {
    throw DomainError("shift cutoff ratio must be finite and > 1, got " + std::to_string(cutoff));
  }
  return ShiftParams(cutoff, std::log(cutoff));
}

quad::QuadratureSpec default_spec() {
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-12;
  spec.max_panels = 400000;
  return spec;
}

double free_space_weight(const ShiftParams& sp) {
  return 0.5 * std::log1p(sp.cutoff() * sp.cutoff()) / sp.log_norm();
}

ShiftResult shift_weighted_integral(const ShiftIntegrand& integrand, const ShiftParams& sp,
                                    const quad::QuadratureSpec& spec) {
  quad::validate(spec);
  quad::QuadratureSpec local = spec;
  if (integrand.oscillation_rate > 0.0) {
    const double period = 2.0 * std::numbers::pi / integrand.oscillation_rate;
    const double wanted = std::ceil(sp.cutoff() / (0.5 * period));
    local.oscillation_period_hint = period;
    // Leave room to refine after the half-period split.
    if (wanted * 4.0 > local.max_panels) local.max_panels = static_cast<int>(wanted * 4.0);
  }
  const auto& bracket = integrand.bracket;
  const quad::QuadratureResult q = quad::integrate(
      [&bracket](double s) { return s / (s * s + 1.0) * bracket(s); }, 0.0, sp.cutoff(), local);
  ShiftResult r{q.value / sp.log_norm(), q.est_error / sp.log_norm(), q.panels};
  if (!q.converged) {
    throw NumericError("shift integral did not converge within " +
                           std::to_string(local.max_panels) + " panels",
                       r.ratio, r.est_error);
  }
  return r;
}

}  // namespace wedgeqed::shift
