#include "wedgeqed/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"

namespace wedgeqed {
namespace {

using specfun::kernel_triple;

// Kernel accuracy per evaluation, used for the error estimate of finite sums.
constexpr double kKernelAbsError = 1e-15;

void require_theta(const WedgeConfig& cfg, double theta0) {
  // Allow rounding slack at the upper wall so theta0 = alpha computed as
  // pi / p is always accepted.
  const double alpha = cfg.alpha();
  if (!std::isfinite(theta0) || theta0 < 0.0 || theta0 > alpha * (1.0 + 1e-14)) {
    throw DomainError("theta0 = " + std::to_string(theta0) + " outside the wedge [0, " +
                      std::to_string(alpha) + "]");
  }
}

void require_chi(double chi, const char* what) {
  if (!std::isfinite(chi) || chi < 0.0) {
    throw DomainError(std::string(what) + " must be finite and >= 0, got " + std::to_string(chi));
  }
}

}  // namespace

WedgeConfig::WedgeConfig(int p) : p_(p) {
  if (p < 1) throw DomainError("wedge parameter p must be >= 1, got " + std::to_string(p));
}

double WedgeConfig::alpha() const { return std::numbers::pi / p_; }

RateResult wedge_decay(const WedgeConfig& cfg, const AtomLocation& loc, Orientation o) {
  require_chi(loc.chi, "chi");
  require_theta(cfg, loc.theta0);
  const int p = cfg.p();
  const double step = std::numbers::pi / p;
  double sum = 0.0;
  for (int n = 0; n < p; ++n) {
    const double sn = std::sin(n * step);
    const double st = std::sin(loc.theta0 + n * step);
    const auto k = kernel_triple(loc.chi * std::abs(sn));
    const auto kt = kernel_triple(loc.chi * std::abs(st));
    switch (o) {
      case Orientation::Axial:
        sum += k.a_val - kt.a_val;
        break;
      case Orientation::Radial:
        sum += k.a_val + sn * sn * k.b_val - kt.a_val - st * st * kt.b_val;
        break;
      case Orientation::Polar:
        sum -= 2.0 * k.c_val - sn * sn * k.b_val + 2.0 * kt.c_val - st * st * kt.b_val;
        break;
    }
  }
  RateResult r;
  r.ratio = 1.5 * sum;
  r.axis = o;
  r.terms_used = p;
  r.est_error = 1.5 * 6.0 * p * kKernelAbsError;
  return r;
}

RateResult plane_decay(double chi_perp, PlaneOrientation o) {
  require_chi(chi_perp, "chi_perp");
  RateResult r;
  r.ratio = o == PlaneOrientation::Perpendicular ? 1.0 - 3.0 * specfun::kernel_c(chi_perp)
                                                 : 1.0 - 1.5 * specfun::kernel_a(chi_perp);
  r.axis = o;
  r.terms_used = 1;
  r.est_error = 3.0 * kKernelAbsError;
  return r;
}

shift::ShiftIntegrand wedge_shift_integrand(const WedgeConfig& cfg, double scaled_r,
                                            double theta0) {
  if (!std::isfinite(scaled_r) || !(scaled_r > 0.0)) {
    throw DomainError("scaled distance 2*gamma*r0 must be > 0, got " + std::to_string(scaled_r));
  }
  require_theta(cfg, theta0);
  const int p = cfg.p();
  const double step = std::numbers::pi / p;
  std::vector<double> sn(p);
  std::vector<double> st(p);
  double fastest = 0.0;
  for (int n = 0; n < p; ++n) {
    sn[n] = std::abs(std::sin(n * step));
    st[n] = std::abs(std::sin(theta0 + n * step));
    fastest = std::max({fastest, sn[n], st[n]});
  }
  shift::ShiftIntegrand out;
  out.oscillation_rate = scaled_r * fastest;
  out.bracket = [sn = std::move(sn), st = std::move(st), scaled_r](double s) {
    double acc = 0.0;
    for (size_t n = 0; n < sn.size(); ++n) {
      const double x = scaled_r * s * sn[n];
      const double xt = scaled_r * s * st[n];
      // sinc = A - C, D = sinc - C, E = sinc + 2C from one sin/cos pair each.
      const auto k = kernel_triple(x);
      const auto kt = kernel_triple(xt);
      const double sinc = k.a_val - k.c_val;
      const double sinc_t = kt.a_val - kt.c_val;
      acc += sinc - sn[n] * sn[n] * (sinc - k.c_val) - (sinc_t + 2.0 * kt.c_val);
    }
    return acc;
  };
  return out;
}

shift::ShiftResult wedge_shift_ratio(const WedgeConfig& cfg, double scaled_r, double theta0,
                                     const shift::ShiftParams& sp,
                                     const quad::QuadratureSpec& spec) {
  return shift::shift_weighted_integral(wedge_shift_integrand(cfg, scaled_r, theta0), sp, spec);
}

}  // namespace wedgeqed
