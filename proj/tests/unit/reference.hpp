#pragma once

// Independent reference evaluations used only by the tests.

#include <cmath>
#include <random>

namespace ref {

// sinc and C(x) = cos x / x^2 - sin x / x^3 in long double; the power series
// is used below 0.5 where the closed form cancels.
inline long double sinc(long double x) {
  if (x < 0.5L) {
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 30; ++k) {
      term *= -x * x / ((2.0L * k) * (2.0L * k + 1.0L));
      sum += term;
    }
    return sum;
  }
  return std::sin(x) / x;
}

inline long double kernel_c(long double x) {
  if (x < 0.5L) {
    // C = sum_j (-1)^(j+1) 2 (j+1) x^(2j) / (2j+3)!
    long double sum = 0.0L;
    long double pw = 1.0L;
    long double fact = 6.0L;
    for (int j = 0; j < 30; ++j) {
      sum += ((j % 2 == 0) ? -1.0L : 1.0L) * 2.0L * (j + 1) * pw / fact;
      pw *= x * x;
      fact *= (2.0L * j + 4.0L) * (2.0L * j + 5.0L);
    }
    return sum;
  }
  return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

inline long double kernel_a(long double x) { return sinc(x) + kernel_c(x); }
inline long double kernel_b(long double x) { return kernel_c(x) - sinc(x); }
inline long double kernel_d(long double x) { return sinc(x) - kernel_c(x); }
inline long double kernel_e(long double x) { return sinc(x) + 2.0L * kernel_c(x); }

// J_0 by its power series in long double, valid for moderate x.
inline long double j0_series(long double x) {
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 60; ++k) {
    term *= -(x * x / 4.0L) / (static_cast<long double>(k) * k);
    sum += term;
  }
  return sum;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

}  // namespace ref
