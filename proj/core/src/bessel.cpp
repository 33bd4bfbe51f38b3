#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"

namespace wedgeqed::specfun {
namespace {

// Hankel's expansion is used for x at or above this (for orders well below x).
constexpr double kAsymptoticMin = 25.0;
constexpr double kLogMaxDouble = 709.78;

void check_order(int order, int cap, const char* name) {
  if (order < 0) {
    throw DomainError(std::string(name) + ": negative order " + std::to_string(order));
  }
  if (order > cap) {
    throw CapabilityError(std::string(name) + ": order " + std::to_string(order) +
                          " exceeds supported maximum " + std::to_string(cap));
  }
}

void check_arg(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(name) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

bool use_series(int order, double x) { return x * x <= 4.0 * (order + 1); }

bool use_asymptotic(int order, double x) {
  return x >= kAsymptoticMin && order <= 0.5 * x;
}

// sum_k (-1)^k (x/2)^{2k+n} / (k! (n+k)!)
double j_series(int order, double x) {
  const double log_lead = order * std::log(0.5 * x) - std::lgamma(order + 1.0);
  if (log_lead < -745.0) return 0.0;
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (k * static_cast<double>(order + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::exp(log_lead) * sum;
}

// Hankel asymptotic P and Q for order nu.
void hankel_pq(int nu, double x, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  p = 1.0;
  q = 0.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    a *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double mag = std::abs(a);
    if (mag > last) break;  // asymptotic series has started to diverge
    last = mag;
    const int r = k % 4;
    const double signed_a = (r == 1 || r == 2) ? -a : a;
    if (k % 2 == 0) {
      p += signed_a;
    } else {
      q -= signed_a;
    }
    if (mag < 1e-17) break;
  }
}

// J_0, J_1 for x >= kAsymptoticMin.
void j01_asymptotic(double x, double& j0, double& j1) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x)) / std::numbers::sqrt2;
  double p;
  double q;
  hankel_pq(0, x, p, q);
  // cos(x - pi/4), sin(x - pi/4)
  j0 = amp * (p * (c + s) - q * (s - c));
  hankel_pq(1, x, p, q);
  // cos(x - 3pi/4), sin(x - 3pi/4)
  j1 = amp * (p * (s - c) - q * (-s - c));
}

std::vector<double> j_upward(int max_order, double x) {
  std::vector<double> out(static_cast<size_t>(max_order) + 1);
  double j0;
  double j1;
  j01_asymptotic(x, j0, j1);
  out[0] = j0;
  if (max_order >= 1) out[1] = j1;
  for (int k = 1; k < max_order; ++k) {
    out[k + 1] = (2.0 * k / x) * out[k] - out[k - 1];
  }
  return out;
}

// Miller's downward recurrence normalised by J_0 + 2 sum J_2k = 1.
std::vector<double> j_miller(int max_order, double x) {
  const double top = std::max(static_cast<double>(max_order), std::ceil(x));
  int start = static_cast<int>(top) + 25 + static_cast<int>(std::ceil(14.0 * std::cbrt(std::max(x, 1.0))));
  start += start % 2;

  std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
  double next = 0.0;   // f_{k+1}
  double cur = 1e-30;  // f_k
  double norm = 0.0;
  constexpr double kBig = 1e250;
  for (int k = start; k >= 1; --k) {
    if (k <= max_order) out[k] = cur;
    if (k % 2 == 0) norm += 2.0 * cur;
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      next /= kBig;
      norm /= kBig;
      for (int i = k; i <= max_order; ++i) out[i] /= kBig;
    }
  }
  out[0] = cur;
  norm += cur;
  for (double& v : out) v /= norm;
  return out;
}

}  // namespace

double bessel_j(int order, double x) {
  check_order(order, kMaxBesselOrder, "bessel_j");
  check_arg(x, "bessel_j");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (use_series(order, x)) return j_series(order, x);
  if (use_asymptotic(order, x)) return j_upward(order, x)[order];
  return j_miller(order, x)[order];
}

double bessel_j_prime(int order, double x) {
  check_order(order, kMaxBesselOrder, "bessel_j_prime");
  check_arg(x, "bessel_j_prime");
  if (order == 0) return -bessel_j(1, x);
  if (x == 0.0) return order == 1 ? 0.5 : 0.0;
  if (use_series(order + 1, x)) {
    return 0.5 * (j_series(order - 1, x) - j_series(order + 1, x));
  }
  const std::vector<double> js =
      use_asymptotic(order + 1, x) ? j_upward(order + 1, x) : j_miller(order + 1, x);
  return 0.5 * (js[order - 1] - js[order + 1]);
}

std::vector<double> bessel_j_sequence(int max_order, double x) {
  check_order(max_order, kMaxBesselOrder + 1, "bessel_j_sequence");
  check_arg(x, "bessel_j_sequence");
  if (x == 0.0) {
    std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  if (use_asymptotic(max_order, x)) return j_upward(max_order, x);
  return j_miller(max_order, x);
}

std::array<double, 3> bessel_j012(double x) {
  check_arg(x, "bessel_j012");
  if (x == 0.0) return {1.0, 0.0, 0.0};
  if (x >= kAsymptoticMin) {
    double j0;
    double j1;
    j01_asymptotic(x, j0, j1);
    return {j0, j1, 2.0 * j1 / x - j0};
  }
  if (x <= 2.0) return {j_series(0, x), j_series(1, x), j_series(2, x)};
  const std::vector<double> js = j_miller(2, x);
  return {js[0], js[1], js[2]};
}

double log_bessel_i(int order, double x) {
  check_order(order, kMaxBesselOrder, "log_bessel_i");
  check_arg(x, "log_bessel_i");
  if (x == 0.0) return order == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  // I_n(x) = (x/2)^n / n! * sum_k (x^2/4)^k / (k! (n+1)_k); all terms positive.
  const double q = 0.25 * x * x;
  double log_scale = order * std::log(0.5 * x) - std::lgamma(order + 1.0);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100000; ++k) {
    term *= q / (k * static_cast<double>(order + k));
    sum += term;
    if (sum > 1e290) {
      log_scale += std::log(sum);
      term /= sum;
      sum = 1.0;
    }
    if (term < 1e-17 * sum && k > q / (order + k)) break;
  }
  return log_scale + std::log(sum);
}

double bessel_i(int order, double x) {
  const double l = log_bessel_i(order, x);
  if (l > kLogMaxDouble) {
    throw CapabilityError("bessel_i: I_" + std::to_string(order) + "(" + std::to_string(x) +
                          ") overflows; use log_bessel_i");
  }
  return std::exp(l);
}

double log_bessel_k(int order, double x) {
  check_order(order, kMaxBesselOrder, "log_bessel_k");
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_bessel_k: argument must be finite and > 0, got " + std::to_string(x));
  }
  // K_nu(x) e^x = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt. The integrand is
  // even and analytic in a strip, so the trapezoid rule converges geometrically;
  // the strip half-width is narrowed for large x where exp(-x cosh) varies fastest.
  const double strip = std::min(std::numbers::pi / 2.0, 2.0 / std::sqrt(x));
  const double h = 0.15 * strip;
  double k0 = 0.5;
  double k1 = 0.5;
  for (int i = 1;; ++i) {
    const double t = i * h;
    const double ch = std::cosh(t);
    const double e = std::exp(-x * (ch - 1.0));
    k0 += e;
    k1 += e * ch;
    if (x * (ch - 1.0) - t > 50.0) break;
  }
  const double log_k0 = std::log(h * k0) - x;
  if (order == 0) return log_k0;
  const double log_k1 = std::log(h * k1) - x;
  if (order == 1) return log_k1;
  // Upward recurrence on the ratio K_{k+1}/K_k, which is the dominant solution.
  double ratio = std::exp(log_k1 - log_k0);
  double log_k = log_k1;
  for (int k = 1; k < order; ++k) {
    ratio = 2.0 * k / x + 1.0 / ratio;
    log_k += std::log(ratio);
  }
  return log_k;
}

double bessel_k(int order, double x) {
  const double l = log_bessel_k(order, x);
  if (l > kLogMaxDouble) {
    throw CapabilityError("bessel_k: K_" + std::to_string(order) + "(" + std::to_string(x) +
                          ") overflows; use log_bessel_k");
  }
  return std::exp(l);
}

}  // namespace wedgeqed::specfun
