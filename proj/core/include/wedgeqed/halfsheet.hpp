#pragma once

#include <utility>

#include "wedgeqed/quadrature.hpp"
#include "wedgeqed/rates.hpp"
#include "wedgeqed/shift.hpp"

namespace wedgeqed {

/// Atom near a conducting half-plane occupying theta = 0 (x >= 0). chi = 2 q r0
/// and theta0 in (0, 2 pi) is measured from the sheet around the edge.
struct HalfSheetLocation {
  double chi = 0.0;
  double theta0 = 0.0;

  /// 2 q y0, signed: y0 = r0 sin(theta0).
  double w() const;
  /// Upper limit of the edge integral, chi cos(theta0); negative on the shadow side.
  double edge_limit() const;
};

struct HalfSheetKernelState {
  double rel_tol = 1e-9;
  double abs_tol = 1e-13;
  int max_panels = 200000;
};

/// Rate for a dipole along the edge (z).
RateResult halfsheet_decay_z(const HalfSheetLocation& loc, const HalfSheetKernelState& ks = {});

/// Rate for a dipole normal to the sheet (y).
RateResult halfsheet_decay_y(const HalfSheetLocation& loc, const HalfSheetKernelState& ks = {});

/// Plane limits far from the edge at w = 2 q y0: {perpendicular, parallel}.
std::pair<double, double> halfsheet_far_limits(double w);

/// Far-from-edge relative level shift at w_gamma = 2 gamma d.
shift::ShiftResult halfsheet_shift_far(double w_gamma, const shift::ShiftParams& sp,
                                       const quad::QuadratureSpec& spec = shift::default_spec());

namespace detail {
// Integrands of the two half-sheet rates, exposed for tests.
double sheet_kernel_z(double z);             // J1/z - J1/z^3 + (J0 - J2)/(2 z^2)
double sheet_kernel_y(double z, double w);   // g1(z) - w^2 g2(z)
double sheet_kernel_chi(double x);           // J1/x - J2/x^2
}  // namespace detail

}  // namespace wedgeqed
