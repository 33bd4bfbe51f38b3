#include "wedgeqed/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"

namespace wedgeqed::oracle {
namespace {

// Summand of the primed order sum at one point of the band, for order nu and
// the angular weight appropriate to the orientation.
double order_term(Orientation o, int nu, double j, double jp, double x, double w, double u,
                  double theta0) {
  const double sn = std::sin(nu * theta0);
  const double cs = std::cos(nu * theta0);
  // nu * J_nu(x) / x, finite as x -> 0.
  double nj_over_x = 0.0;
  if (nu > 0) nj_over_x = x > 0.0 ? nu * j / x : (nu == 1 ? 0.5 : 0.0);
  switch (o) {
    case Orientation::Axial:
      return w * w * j * j * sn * sn;
    case Orientation::Radial:
      return (nj_over_x * nj_over_x + u * u * jp * jp) * sn * sn;
    case Orientation::Polar:
      return (u * u * nj_over_x * nj_over_x + jp * jp) * cs * cs;
  }
  return 0.0;
}

}  // namespace

ModeSumControl ModeSumControl::adaptive(const WedgeConfig& cfg, const AtomLocation& loc) {
  const double rho = 0.5 * loc.chi;
  ModeSumControl c;
  const double top_order = rho + 12.0 * std::cbrt(std::max(rho, 1.0)) + 30.0;
  c.m_max = std::max(1, static_cast<int>(std::ceil(top_order / cfg.p())));
  c.k_quadrature.rel_tol = 1e-11;
  c.k_quadrature.abs_tol = 1e-14;
  c.k_quadrature.max_panels = 20000;
  return c;
}

RateResult mode_sum_decay(const WedgeConfig& cfg, const AtomLocation& loc, Orientation o,
                          const ModeSumControl& ctl) {
  const double alpha = cfg.alpha();
  if (!std::isfinite(loc.chi) || !(loc.chi > 0.0)) {
    throw DomainError("mode_sum_decay: chi must be > 0");
  }
  if (!(loc.theta0 > 0.0) || !(loc.theta0 < alpha)) {
    throw DomainError("mode_sum_decay: theta0 must lie strictly inside the wedge");
  }
  if (ctl.m_max < 1) throw DomainError("mode_sum_decay: m_max must be >= 1");
  const int p = cfg.p();
  const int top = ctl.m_max * p;
  if (top + 1 > specfun::kMaxBesselOrder + 1) {
    throw CapabilityError("mode_sum_decay: order m_max * p = " + std::to_string(top) +
                          " exceeds the Bessel order cap");
  }
  const double rho = 0.5 * loc.chi;

  double worst_tail = 0.0;
  auto integrand = [&](double phi) {
    const double w = std::cos(phi);
    const double u = std::sin(phi);
    const double x = w * rho;
    const std::vector<double> js = specfun::bessel_j_sequence(top + 1, x);
    double sum = 0.0;
    double last = 0.0;
    for (int m = 0; m <= ctl.m_max; ++m) {
      const int nu = m * p;
      const double j = js[nu];
      const double jp = nu == 0 ? -js[1] : 0.5 * (js[nu - 1] - js[nu + 1]);
      double t = order_term(o, nu, j, jp, x, w, u, loc.theta0);
      if (m == 0) t *= 0.5;
      sum += t;
      last = t;
    }
    worst_tail = std::max(worst_tail, std::abs(last) * w);
    return w * sum;
  };

  quad::QuadratureSpec spec = ctl.k_quadrature;
  spec.oscillation_period_hint = 2.0 * std::numbers::pi / std::max(rho, 1.0);
  const double initial = std::ceil(0.5 * std::numbers::pi / (0.5 * *spec.oscillation_period_hint));
  spec.max_panels = std::max(spec.max_panels, static_cast<int>(8.0 * initial));
  const quad::QuadratureResult q = quad::integrate(integrand, 0.0, 0.5 * std::numbers::pi, spec);

  const double scale = 1.5 * 4.0 * p;
  RateResult r;
  r.ratio = scale * q.value;
  r.axis = o;
  r.terms_used = ctl.m_max + 1;
  r.est_error = scale * (q.est_error + 0.5 * std::numbers::pi * worst_tail);
  if (!q.converged) {
    throw NumericError("mode_sum_decay: band quadrature did not converge", r.ratio, r.est_error);
  }
  if (scale * worst_tail > ctl.tail_tol) {
    throw NumericError("mode_sum_decay: order sum not converged at m_max = " +
                           std::to_string(ctl.m_max) + "; increase m_max",
                       r.ratio, r.est_error);
  }
  return r;
}

double graf_residual(const GrafCase& c, int m_max) {
  if (c.p < 1) throw DomainError("graf_residual: p must be >= 1");
  if (!(c.zeta > 0.0) || !(c.r1 > 0.0) || !(c.r1 < c.r2) || !std::isfinite(c.r2) ||
      !std::isfinite(c.phi)) {
    throw DomainError("graf_residual: need zeta > 0 and 0 < r1 < r2");
  }
  if (m_max < 4) throw DomainError("graf_residual: m_max must be >= 4");
  if (static_cast<long long>(m_max) * c.p > specfun::kMaxBesselOrder) {
    throw CapabilityError("graf_residual: order m_max * p exceeds the Bessel order cap");
  }
  double lhs = 0.0;
  for (int n = 0; n < c.p; ++n) {
    const double ang = c.phi + 2.0 * n * std::numbers::pi / c.p;
    const double rn2 = c.r1 * c.r1 + c.r2 * c.r2 - 2.0 * c.r1 * c.r2 * std::cos(ang);
    lhs += specfun::bessel_k(0, c.zeta * std::sqrt(rn2));
  }
  const double x1 = c.zeta * c.r1;
  const double x2 = c.zeta * c.r2;
  double rhs = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const int nu = m * c.p;
    const double log_term = specfun::log_bessel_i(nu, x1) + specfun::log_bessel_k(nu, x2);
    if (log_term > 709.0) {
      throw CapabilityError("graf_residual: I*K product overflows at order " + std::to_string(nu));
    }
    double t = std::exp(log_term) * std::cos(nu * c.phi);
    if (m == 0) t *= 0.5;
    rhs += t;
  }
  rhs *= 2.0 * c.p;
  return std::abs(lhs - rhs);
}

double plates_mode_sum(const PlatesGeometry& geom, PlaneOrientation o) {
  const double d = geom.d_over_lambda;
  const double y = geom.y_over_lambda;
  if (!(d > 0.0) || !(y > 0.0) || !(y < d) || !std::isfinite(d)) {
    throw DomainError("plates_mode_sum: need 0 < y < d");
  }
  const double two_d = 2.0 * d;
  const int top = static_cast<int>(std::floor(two_d));
  const bool parallel = o == PlaneOrientation::Parallel;
  double sum = 0.0;
  for (int k = parallel ? 1 : 0; k <= top; ++k) {
    double weight = k == 0 ? 0.5 : 1.0;
    if (k == two_d) weight *= 0.5;
    const double c = k / two_d;
    const double phase = k * std::numbers::pi * y / d;
    if (parallel) {
      const double s = std::sin(phase);
      sum += weight * (1.0 + c * c) * s * s;
    } else {
      const double cs = std::cos(phase);
      sum += weight * (1.0 - c * c) * cs * cs;
    }
  }
  return parallel ? 0.75 / d * sum : 1.5 / d * sum;
}

KernelSpotCheck kernel_spot_check(double x) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("kernel_spot_check: x must be >= 0");
  const long double lx = x;
  long double s;
  long double c;
  if (lx < 0.5L) {
    const long double x2 = lx * lx;
    long double term = 1.0L;
    s = 1.0L;
    c = -1.0L / 3.0L;
    long double fact = 1.0L;  // (2j+3)!
    long double pw = 1.0L;    // x^(2j)
    for (int j = 1; j < 40; ++j) {
      term *= -x2 / ((2.0L * j) * (2.0L * j + 1.0L));
      s += term;
      pw *= x2;
      fact = 1.0L;
      for (int f = 2; f <= 2 * j + 3; ++f) fact *= f;
      c += ((j % 2 == 0) ? -1.0L : 1.0L) * 2.0L * (j + 1) * pw / fact;
    }
  } else {
    s = std::sin(lx) / lx;
    c = std::cos(lx) / (lx * lx) - std::sin(lx) / (lx * lx * lx);
  }
  const std::array<long double, 6> ref = {s, s + c, c - s, c, s - c, s + 2.0L * c};
  const std::array<double, 6> got = {specfun::sinc(x),     specfun::kernel_a(x),
                                     specfun::kernel_b(x), specfun::kernel_c(x),
                                     specfun::kernel_d(x), specfun::kernel_e(x)};
  KernelSpotCheck out{x, 0.0, 0.0};
  for (size_t i = 0; i < ref.size(); ++i) {
    const long double d = std::abs(static_cast<long double>(got[i]) - ref[i]);
    out.max_abs_diff = std::max(out.max_abs_diff, static_cast<double>(d));
    if (ref[i] != 0.0L) {
      out.max_rel_diff = std::max(out.max_rel_diff, static_cast<double>(d / std::abs(ref[i])));
    }
  }
  return out;
}

}  // namespace wedgeqed::oracle
