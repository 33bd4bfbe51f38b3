#include "wedgeqed/halfsheet.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"

namespace wedgeqed {
namespace {

// The Bessel combinations below are finite at the origin but assembled from
// pieces that diverge like z^-2; below this they are summed as power series.
constexpr double kSeriesBelow = 1.0;
constexpr int kSeriesTerms = 12;

using Poly = std::array<double, kSeriesTerms>;

// Coefficient of z^(2j) in J_nu(z) / z^s (zero where the power does not occur).
double bessel_ratio_coeff(int nu, int s, int j) {
  const int k = j + (s - nu) / 2;
  if (k < 0) return 0.0;
  const double mag = 1.0 / (std::ldexp(1.0, 2 * k + nu) * std::tgamma(k + 1.0) *
                            std::tgamma(k + nu + 1.0));
  return k % 2 == 0 ? mag : -mag;
}

struct Piece {
  double factor;
  int nu;
  int s;
};

template <size_t N>
Poly series_of(const std::array<Piece, N>& pieces) {
  Poly c{};
  for (int j = 0; j < kSeriesTerms; ++j) {
    for (const Piece& p : pieces) c[j] += p.factor * bessel_ratio_coeff(p.nu, p.s, j);
  }
  return c;
}

double eval_even(const Poly& c, double z) {
  const double z2 = z * z;
  double acc = 0.0;
  for (int j = kSeriesTerms - 1; j >= 0; --j) acc = acc * z2 + c[j];
  return acc;
}

const Poly& kernel_z_series() {
  static const Poly c = series_of(std::array<Piece, 4>{
      {{1.0, 1, 1}, {-1.0, 1, 3}, {0.5, 0, 2}, {-0.5, 2, 2}}});
  return c;
}

const Poly& g1_series() {
  static const Poly c =
      series_of(std::array<Piece, 3>{{{1.0, 0, 2}, {-2.0, 1, 3}, {1.0, 1, 1}}});
  return c;
}

const Poly& g2_series() {
  static const Poly c = series_of(std::array<Piece, 2>{{{1.0, 1, 3}, {-4.0, 2, 4}}});
  return c;
}

const Poly& chi_kernel_series() {
  static const Poly c = series_of(std::array<Piece, 2>{{{1.0, 1, 1}, {-1.0, 2, 2}}});
  return c;
}

void require_location(const HalfSheetLocation& loc) {
  if (!std::isfinite(loc.chi) || !(loc.chi > 0.0)) {
    throw DomainError("half-sheet: chi must be finite and > 0 (the edge is singular), got " +
                      std::to_string(loc.chi));
  }
  if (!std::isfinite(loc.theta0) || !(loc.theta0 > 0.0) ||
      !(loc.theta0 < 2.0 * std::numbers::pi)) {
    throw DomainError("half-sheet: theta0 must lie in (0, 2 pi), got " +
                      std::to_string(loc.theta0));
  }
}

quad::QuadratureSpec spec_from(const HalfSheetKernelState& ks, double length) {
  quad::QuadratureSpec spec;
  spec.rel_tol = ks.rel_tol;
  spec.abs_tol = ks.abs_tol;
  spec.max_panels = ks.max_panels;
  spec.oscillation_period_hint = 2.0 * std::numbers::pi;
  const double initial = std::ceil(std::abs(length) / std::numbers::pi);
  if (4.0 * initial > spec.max_panels) spec.max_panels = static_cast<int>(4.0 * initial);
  quad::validate(spec);
  return spec;
}

struct Integral {
  double value;
  double error;
  int panels;
  bool converged;
};

template <typename F>
Integral run(F&& f, double upper, const HalfSheetKernelState& ks) {
  const auto q = quad::integrate(std::forward<F>(f), 0.0, upper, spec_from(ks, upper));
  return {q.value, q.est_error, q.panels, q.converged};
}

RateResult finish(double ratio, double error, int panels, bool converged, SheetAxis axis) {
  RateResult r;
  r.ratio = ratio;
  r.axis = axis;
  r.terms_used = panels;
  r.est_error = error;
  if (!converged) {
    throw NumericError("half-sheet edge integral did not converge", ratio, error);
  }
  return r;
}

}  // namespace

double HalfSheetLocation::w() const { return chi * std::sin(theta0); }
double HalfSheetLocation::edge_limit() const { return chi * std::cos(theta0); }

namespace detail {

double sheet_kernel_z(double z) {
  if (z < kSeriesBelow) return eval_even(kernel_z_series(), z);
  const auto [j0, j1, j2] = specfun::bessel_j012(z);
  const double z2 = z * z;
  return j1 / z - j1 / (z2 * z) + (j0 - j2) / (2.0 * z2);
}

double sheet_kernel_y(double z, double w) {
  if (z < kSeriesBelow) return eval_even(g1_series(), z) - w * w * eval_even(g2_series(), z);
  const auto [j0, j1, j2] = specfun::bessel_j012(z);
  const double z2 = z * z;
  const double g1 = j0 / z2 - 2.0 * j1 / (z2 * z) + j1 / z;
  const double g2 = j1 / (z2 * z) - 4.0 * j2 / (z2 * z2);
  return g1 - w * w * g2;
}

double sheet_kernel_chi(double x) {
  if (x < kSeriesBelow) return eval_even(chi_kernel_series(), x);
  return specfun::bessel_j(1, x) / x - specfun::bessel_j(2, x) / (x * x);
}

}  // namespace detail

RateResult halfsheet_decay_z(const HalfSheetLocation& loc, const HalfSheetKernelState& ks) {
  require_location(loc);
  const double w = loc.w();
  const double len = loc.edge_limit();
  const Integral edge = run(
      [w](double x) { return detail::sheet_kernel_z(std::hypot(x, w)); }, len, ks);
  const Integral radial = run([](double x) { return detail::sheet_kernel_z(x); }, loc.chi, ks);
  const double bracket = specfun::kernel_a(std::abs(w)) + edge.value - radial.value;
  return finish(0.5 - 0.75 * bracket, 0.75 * (edge.error + radial.error),
                edge.panels + radial.panels, edge.converged && radial.converged, SheetAxis::Z);
}

RateResult halfsheet_decay_y(const HalfSheetLocation& loc, const HalfSheetKernelState& ks) {
  require_location(loc);
  const double chi = loc.chi;
  const double th = loc.theta0;
  const double w = loc.w();
  const double len = loc.edge_limit();

  const Integral edge = run(
      [w](double x) { return detail::sheet_kernel_y(std::hypot(x, w), w); }, len, ks);
  const Integral radial = run([](double x) { return detail::sheet_kernel_chi(x); }, chi, ks);

  const double s2 = std::sin(th) * std::sin(th);
  const double ch = std::cos(0.5 * th);
  // 2cos(t/2)cos(3t/2) - cos(t)/2 - cos(2t)/2 + sin^2(t)/2
  const double t1 = 2.0 * ch * std::cos(1.5 * th) - 0.5 * std::cos(th) - 0.5 * std::cos(2.0 * th) +
                    0.5 * s2;
  const double t0 = 2.0 * ch * ch * ch * ch + 0.25 * s2;
  const auto [j0, j1, j2] = specfun::bessel_j012(chi);

  const double bracket = specfun::kernel_c(std::abs(w)) + t1 * j1 / (chi * chi) -
                         0.25 * s2 * j2 / chi - t0 * j0 / chi - 0.5 * radial.value -
                         0.5 * edge.value;
  return finish(0.5 - 1.5 * bracket, 0.75 * (edge.error + radial.error),
                edge.panels + radial.panels, edge.converged && radial.converged, SheetAxis::Y);
}

std::pair<double, double> halfsheet_far_limits(double w) {
  if (!std::isfinite(w) || w < 0.0) {
    throw DomainError("half-sheet far limit: w must be finite and >= 0, got " + std::to_string(w));
  }
  return {1.0 - 3.0 * specfun::kernel_c(w), 1.0 - 1.5 * specfun::kernel_a(w)};
}

shift::ShiftResult halfsheet_shift_far(double w_gamma, const shift::ShiftParams& sp,
                                       const quad::QuadratureSpec& spec) {
  if (!std::isfinite(w_gamma) || !(w_gamma > 0.0)) {
    throw DomainError("half-sheet shift: 2*gamma*d must be > 0, got " + std::to_string(w_gamma));
  }
  shift::ShiftIntegrand e_kernel;
  e_kernel.oscillation_rate = w_gamma;
  e_kernel.bracket = [w_gamma](double s) { return specfun::kernel_e(w_gamma * s); };
  // The constant part of the bracket integrates in closed form.
  shift::ShiftResult r = shift::shift_weighted_integral(e_kernel, sp, spec);
  r.ratio = shift::free_space_weight(sp) - r.ratio;
  return r;
}

}  // namespace wedgeqed
