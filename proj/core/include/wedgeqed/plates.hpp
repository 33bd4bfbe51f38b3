#pragma once

#include "wedgeqed/rates.hpp"

namespace wedgeqed {

/// Two parallel conducting plates a distance d apart; the atom sits at
/// height y above the lower plate. Both lengths are in units of lambda.
struct PlatesGeometry {
  double d_over_lambda = 1.0;
  double y_over_lambda = 0.5;
};

enum class Acceleration { None, PairAveraging, EulerTransform };

struct SeriesControl {
  int max_images = 1 << 20;
  Acceleration acceleration = Acceleration::PairAveraging;
  double tail_tol = 1e-6;
  /// Number of repeated pair averages for EulerTransform.
  int euler_depth = 12;
};

/// Image-series rates between the plates. The image sum converges only
/// conditionally for the parallel dipole; the truncation is doubled until the
/// accelerated estimate moves by less than tail_tol. Throws NumericError
/// (with the partial estimate) if max_images is reached first, which happens
/// close to the mode thresholds d / lambda = k / 2.
RateResult plates_decay(const PlatesGeometry& geom, PlaneOrientation o,
                        const SeriesControl& ctl = {});

/// The same configuration as a wedge of apex pi / p_large whose atom sits at
/// arc distance y from one wall at radius r0 = d p / pi. Polar maps to the
/// perpendicular dipole; Radial and Axial both map to parallel.
RateResult plates_limit_oracle(const PlatesGeometry& geom, Orientation o, int p_large);

}  // namespace wedgeqed
