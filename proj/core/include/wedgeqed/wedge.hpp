#pragma once

#include "wedgeqed/rates.hpp"
#include "wedgeqed/shift.hpp"

namespace wedgeqed {

/// Conducting wedge with apex angle alpha = pi / p.
class WedgeConfig {
 public:
  /// Throws DomainError for p < 1.
  explicit WedgeConfig(int p);
  int p() const { return p_; }
  double alpha() const;

 private:
  int p_;
};

/// Dimensionless dipole position: chi = 2 q r0 = 4 pi r0 / lambda, and the
/// polar angle theta0 measured from one wall.
struct AtomLocation {
  double chi = 0.0;
  double theta0 = 0.0;
};

RateResult wedge_decay(const WedgeConfig& cfg, const AtomLocation& loc, Orientation o);

/// Atom at distance d from a single plane, chi_perp = 2 q d.
RateResult plane_decay(double chi_perp, PlaneOrientation o);

/// Relative level shift inside the wedge; scaled_r = 2 gamma r0.
shift::ShiftResult wedge_shift_ratio(const WedgeConfig& cfg, double scaled_r, double theta0,
                                     const shift::ShiftParams& sp,
                                     const quad::QuadratureSpec& spec = shift::default_spec());

/// The bracket summed under the shift integral, exposed for cross-checks.
shift::ShiftIntegrand wedge_shift_integrand(const WedgeConfig& cfg, double scaled_r,
                                            double theta0);

}  // namespace wedgeqed
