#pragma once

#include <functional>

#include "wedgeqed/quadrature.hpp"

namespace wedgeqed::shift {

/// mc^2 / (17.8 Rydberg), the ratio of the Compton frequency to Bethe's
/// average excitation energy.
inline constexpr double kElectronRestEnergyEv = 510998.95;
inline constexpr double kRydbergEv = 13.6057;
inline constexpr double kBetheFactor = 17.8;
inline constexpr double kDefaultCutoff = kElectronRestEnergyEv / (kBetheFactor * kRydbergEv);

class ShiftParams {
 public:
  /// Throws DomainError unless cutoff > 1 and finite.
  static ShiftParams with_cutoff(double cutoff);
  static ShiftParams standard() { return with_cutoff(kDefaultCutoff); }

  double cutoff() const { return cutoff_; }
  double log_norm() const { return log_norm_; }

 private:
  ShiftParams(double cutoff, double log_norm) : cutoff_(cutoff), log_norm_(log_norm) {}
  double cutoff_;
  double log_norm_;
};

struct ShiftIntegrand {
  std::function<double(double)> bracket;
  /// Fastest angular frequency of the bracket in s; 0 if it does not oscillate.
  double oscillation_rate = 0.0;
};

struct ShiftResult {
  double ratio = 0.0;
  double est_error = 0.0;
  int panels = 0;
};

/// The default tolerance used by the shift operations.
quad::QuadratureSpec default_spec();

/// (1/ln L) * int_0^L s/(s^2+1) * bracket(s) ds, with panels no wider than
/// half a period of the bracket. Throws NumericError on non-convergence.
ShiftResult shift_weighted_integral(const ShiftIntegrand& integrand, const ShiftParams& sp,
                                    const quad::QuadratureSpec& spec = default_spec());

/// (1/ln L) * int_0^L s/(s^2+1) ds = ln(1+L^2) / (2 ln L).
double free_space_weight(const ShiftParams& sp);

}  // namespace wedgeqed::shift
