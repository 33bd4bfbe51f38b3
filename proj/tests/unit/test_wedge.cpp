#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "reference.hpp"
#include "wedgeqed/errors.hpp"
#include "wedgeqed/wedge.hpp"

using namespace wedgeqed;
using std::numbers::pi;

namespace {

constexpr Orientation kAll[] = {Orientation::Radial, Orientation::Polar, Orientation::Axial};

// (1/ln L) int_0^L s/(s^2+1) bracket(s) ds with Boost's G-K 61 on panels of
// width `panel`, the bracket assembled from the long double reference kernels.
double reference_shift(int p, double g, double theta0, double cutoff, double panel) {
  const double step = pi / p;
  auto bracket = [&](double s) {
    long double acc = 0.0L;
    for (int n = 0; n < p; ++n) {
      const long double sn = std::abs(std::sin(n * step));
      const long double st = std::abs(std::sin(theta0 + n * step));
      acc += ref::sinc(g * s * sn) - sn * sn * ref::kernel_d(g * s * sn) - ref::kernel_e(g * s * st);
    }
    return static_cast<double>(acc);
  };
  auto f = [&](double s) { return s / (s * s + 1.0) * bracket(s); };
  double total = 0.0;
  for (double a = 0.0; a < cutoff; a += panel) {
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, std::min(a + panel, cutoff), 0);
  }
  return total / std::log(cutoff);
}

}  // namespace

TEST_SUITE("wedge") {

TEST_CASE("p = 1 reproduces the plane sheet") {
  const WedgeConfig cfg(1);
  for (double x : {0.05, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0, 1e3}) {
    const AtomLocation loc{x, 0.5 * pi};
    const double par = static_cast<double>(1.0L - 1.5L * ref::kernel_a(x));
    const double perp = static_cast<double>(1.0L - 3.0L * ref::kernel_c(x));
    CHECK(std::abs(wedge_decay(cfg, loc, Orientation::Axial).ratio - par) <= 1e-13);
    CHECK(std::abs(wedge_decay(cfg, loc, Orientation::Polar).ratio - par) <= 1e-13);
    CHECK(std::abs(wedge_decay(cfg, loc, Orientation::Radial).ratio - perp) <= 1e-13);
    CHECK(plane_decay(x, PlaneOrientation::Parallel).ratio == doctest::Approx(par).epsilon(1e-13));
    CHECK(plane_decay(x, PlaneOrientation::Perpendicular).ratio == doctest::Approx(perp).epsilon(1e-13));
  }
}

TEST_CASE("plane: image-dipole limits at the surface and free space far away") {
  CHECK(plane_decay(0.0, PlaneOrientation::Perpendicular).ratio == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(plane_decay(0.0, PlaneOrientation::Parallel).ratio) <= 1e-14);
  CHECK(plane_decay(1e6, PlaneOrientation::Parallel).ratio == doctest::Approx(1.0).epsilon(2e-6));
}

TEST_CASE("all rates vanish at the apex for p >= 2") {
  for (int p : {2, 3, 4, 7, 40}) {
    const WedgeConfig cfg(p);
    for (double frac : {0.1, 0.5, 0.8}) {
      for (auto o : kAll) {
        CHECK(std::abs(wedge_decay(cfg, {0.0, frac * cfg.alpha()}, o).ratio) <= 1e-13);
      }
    }
  }
}

TEST_CASE("axial rate vanishes on both walls") {
  for (int p : {1, 2, 3, 5, 12}) {
    const WedgeConfig cfg(p);
    for (double chi : {0.3, 2.0, 20.0, 300.0}) {
      CHECK(std::abs(wedge_decay(cfg, {chi, 0.0}, Orientation::Axial).ratio) <= 1e-13);
      CHECK(std::abs(wedge_decay(cfg, {chi, cfg.alpha()}, Orientation::Axial).ratio) <= 1e-13);
    }
  }
}

TEST_CASE("mirror symmetry about the bisector and non-negativity") {
  auto rng = ref::rng();
  std::uniform_int_distribution<int> pick_p(1, 9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const WedgeConfig cfg(pick_p(rng));
    const double chi = 60.0 * unit(rng);
    const double th = cfg.alpha() * unit(rng);
    for (auto o : kAll) {
      const double a = wedge_decay(cfg, {chi, th}, o).ratio;
      const double b = wedge_decay(cfg, {chi, cfg.alpha() - th}, o).ratio;
      CHECK(std::abs(a - b) <= 1e-12);
      CHECK(a >= -1e-12);
    }
  }
}

TEST_CASE("free-space rate far from the apex") {
  for (int p : {1, 2, 3, 6}) {
    const WedgeConfig cfg(p);
    for (auto o : kAll) {
      CHECK(wedge_decay(cfg, {1e7, 0.5 * cfg.alpha()}, o).ratio == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("shift ratio against an independent Gauss-Kronrod evaluation") {
  const auto sp = shift::ShiftParams::standard();
  struct Case {
    int p;
    double g;
    double frac;
  };
  for (const Case c : {Case{1, 1.0, 0.5}, Case{1, 5.0, 0.3}, Case{3, 0.5, 0.5}, Case{3, 2.0, 0.2}}) {
    const WedgeConfig cfg(c.p);
    const double th = c.frac * cfg.alpha();
    const double got = wedge_shift_ratio(cfg, c.g, th, sp).ratio;
    const double want = reference_shift(c.p, c.g, th, sp.cutoff(), std::min(1.0, 1.0 / c.g));
    INFO("p = " << c.p << ", 2 gamma r0 = " << c.g);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("the narrower wedge lowers the shift close to the apex") {
  const auto sp = shift::ShiftParams::standard();
  const double p1 = wedge_shift_ratio(WedgeConfig(1), 0.05, 0.5 * pi, sp).ratio;
  const double p3 = wedge_shift_ratio(WedgeConfig(3), 0.05, pi / 6.0, sp).ratio;
  CHECK(p3 < p1);
  CHECK(p1 < shift::free_space_weight(sp));
}

TEST_CASE("wedge domain") {
  CHECK_THROWS_AS(WedgeConfig(0), DomainError);
  const WedgeConfig cfg(3);
  CHECK_THROWS_AS(wedge_decay(cfg, {1.0, cfg.alpha() * 1.01}, Orientation::Axial), DomainError);
  CHECK_THROWS_AS(wedge_decay(cfg, {1.0, -0.01}, Orientation::Axial), DomainError);
  CHECK_THROWS_AS(wedge_decay(cfg, {-1.0, 0.5}, Orientation::Axial), DomainError);
  CHECK_THROWS_AS(plane_decay(std::nan(""), PlaneOrientation::Parallel), DomainError);
  CHECK_THROWS_AS(wedge_shift_integrand(cfg, 0.0, 0.5), DomainError);
  CHECK_NOTHROW(wedge_decay(cfg, {1.0, pi / 3.0}, Orientation::Radial));
}

}  // TEST_SUITE
