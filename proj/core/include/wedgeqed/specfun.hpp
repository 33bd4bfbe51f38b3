#pragma once

// Special functions used by the rate and shift formulas.
//
// The trigonometric kernels are the recurring combinations of
//   sinc(x) = sin x / x,   C(x) = cos x / x^2 - sin x / x^3
// from which every closed-form rate is assembled:
//   A = sinc + C,  B = C - sinc,  D = sinc - C,  E = sinc + 2C.
// Each of sinc and C switches to its Taylor series below x = 1, so the
// 1/x^2 singular pieces never cancel numerically.

#include <array>
#include <vector>

namespace wedgeqed::specfun {

inline constexpr int kMaxBesselOrder = 2000;

/// Below this argument the kernels use their power series.
inline constexpr double kKernelSeriesThreshold = 1.0;

double sinc(double x);
double kernel_a(double x);
double kernel_b(double x);
double kernel_c(double x);
double kernel_d(double x);
double kernel_e(double x);

struct KernelTriple {
  double a_val;
  double b_val;
  double c_val;
};

/// A, B and C at a common argument, sharing one sin/cos evaluation.
KernelTriple kernel_triple(double x);

namespace detail {
// Both branches are exposed so the crossover can be tested directly.
double sinc_series(double x);
double kernel_c_series(double x);
double sinc_direct(double x);
double kernel_c_direct(double x);
}  // namespace detail

/// J_n(x), n <= kMaxBesselOrder, x >= 0.
double bessel_j(int order, double x);

/// J'_n(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2, with J'_0 = -J_1.
double bessel_j_prime(int order, double x);

/// J_0(x) .. J_max_order(x) in one downward sweep.
std::vector<double> bessel_j_sequence(int max_order, double x);

/// J_0, J_1, J_2 at the same argument; the half-sheet integrands need all three.
std::array<double, 3> bessel_j012(double x);

/// Modified Bessel functions of integer order. The plain versions throw
/// CapabilityError when the value overflows a double.
double bessel_i(int order, double x);
double bessel_k(int order, double x);

/// Natural logarithms of I_n(x) and K_n(x), finite for any order <= cap.
double log_bessel_i(int order, double x);
double log_bessel_k(int order, double x);

}  // namespace wedgeqed::specfun
