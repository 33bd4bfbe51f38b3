#pragma once

#include "wedgeqed/plates.hpp"
#include "wedgeqed/quadrature.hpp"
#include "wedgeqed/rates.hpp"
#include "wedgeqed/wedge.hpp"

namespace wedgeqed::oracle {

struct ModeSumControl {
  /// Angular cutoff; orders m p are summed for m = 0 .. m_max.
  int m_max = 1;
  quad::QuadratureSpec k_quadrature;
  /// Largest tolerated contribution of the last retained order.
  double tail_tol = 1e-12;

  /// Cutoff large enough for J_{m p}(chi / 2) to be negligible past m_max.
  static ModeSumControl adaptive(const WedgeConfig& cfg, const AtomLocation& loc);
};

/// Decay rate from the cylindrical mode expansion of the wedge Green tensor,
/// integrated over the propagating band of axial wavenumbers. Independent of
/// the image sums in wedge_decay and used to check them.
RateResult mode_sum_decay(const WedgeConfig& cfg, const AtomLocation& loc, Orientation o,
                          const ModeSumControl& ctl);

struct GrafCase {
  int p = 1;
  double zeta = 1.0;
  double r1 = 0.5;
  double r2 = 1.0;
  double phi = 0.0;
};

/// |sum_n K0(zeta R_n) - 2p sum'_m I_{mp}(zeta r1) K_{mp}(zeta r2) cos(m p phi)|
/// with R_n^2 = r1^2 + r2^2 - 2 r1 r2 cos(phi + 2 n pi / p).
double graf_residual(const GrafCase& c, int m_max);

/// Plate rates from counting guided modes: for 2d/lambda = D2, mode k
/// contributes while k <= D2, so the result is a finite sum with jumps at
/// d/lambda = k/2 (a mode exactly at cutoff is weighted by one half).
double plates_mode_sum(const PlatesGeometry& geom, PlaneOrientation o);

struct KernelSpotCheck {
  double x;
  double max_abs_diff;  // over sinc and A..E
  double max_rel_diff;
};

/// Compares the double-precision kernels at x with a long double evaluation
/// (power series below 0.5, closed form above).
KernelSpotCheck kernel_spot_check(double x);

}  // namespace wedgeqed::oracle
