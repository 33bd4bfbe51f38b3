#include "wedgeqed/specfun.hpp"

#include <cmath>
#include <string>

#include "wedgeqed/errors.hpp"

namespace wedgeqed::specfun {
namespace {

void require_kernel_arg(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(name) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

}  // namespace

namespace detail {

double sinc_series(double x) {
  const double x2 = x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 30; ++k) {
    term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// C(x) = sum_j (-1)^{j+1} 2(j+1) x^{2j} / (2j+3)!
double kernel_c_series(double x) {
  const double x2 = x * x;
  double t = -1.0 / 6.0;
  double sum = 2.0 * t;
  for (int j = 0; j < 30; ++j) {
    t *= -x2 / ((2.0 * j + 4.0) * (2.0 * j + 5.0));
    const double term = 2.0 * (j + 2) * t;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double sinc_direct(double x) { return std::sin(x) / x; }

double kernel_c_direct(double x) {
  return (std::cos(x) - std::sin(x) / x) / (x * x);
}

}  // namespace detail

double sinc(double x) {
  require_kernel_arg(x, "sinc");
  return x < kKernelSeriesThreshold ? detail::sinc_series(x) : detail::sinc_direct(x);
}

double kernel_c(double x) {
  require_kernel_arg(x, "kernel_c");
  return x < kKernelSeriesThreshold ? detail::kernel_c_series(x)
                                    : detail::kernel_c_direct(x);
}

double kernel_a(double x) { return sinc(x) + kernel_c(x); }
double kernel_b(double x) { return kernel_c(x) - sinc(x); }
double kernel_d(double x) { return sinc(x) - kernel_c(x); }
double kernel_e(double x) { return sinc(x) + 2.0 * kernel_c(x); }

KernelTriple kernel_triple(double x) {
  require_kernel_arg(x, "kernel_triple");
  double s;
  double c;
  if (x < kKernelSeriesThreshold) {
    s = detail::sinc_series(x);
    c = detail::kernel_c_series(x);
  } else {
    const double sn = std::sin(x);
    const double cs = std::cos(x);
    s = sn / x;
    c = (cs - s) / (x * x);
  }
  return {s + c, c - s, c};
}

}  // namespace wedgeqed::specfun
