#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wedgeqed/errors.hpp"
#include "wedgeqed/oracle.hpp"

using namespace wedgeqed;
using std::numbers::pi;

TEST_SUITE("oracle") {

TEST_CASE("mode sum reproduces the closed forms") {
  for (int p : {1, 2, 3, 4}) {
    const WedgeConfig cfg(p);
    for (double frac : {0.25, 0.5, 0.9}) {
      for (double chi : {0.5, 5.0, 20.0}) {
        const AtomLocation loc{chi, frac * cfg.alpha()};
        const auto ctl = oracle::ModeSumControl::adaptive(cfg, loc);
        for (auto o : {Orientation::Radial, Orientation::Polar, Orientation::Axial}) {
          INFO("p = " << p << ", theta0/alpha = " << frac << ", chi = " << chi << ", " << to_string(o));
          const double a = wedge_decay(cfg, loc, o).ratio;
          CHECK(oracle::mode_sum_decay(cfg, loc, o, ctl).ratio == doctest::Approx(a).epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("doubling the angular cutoff changes nothing") {
  const WedgeConfig cfg(2);
  const AtomLocation loc{12.0, 0.3};
  auto ctl = oracle::ModeSumControl::adaptive(cfg, loc);
  const double a = oracle::mode_sum_decay(cfg, loc, Orientation::Radial, ctl).ratio;
  ctl.m_max *= 2;
  CHECK(std::abs(oracle::mode_sum_decay(cfg, loc, Orientation::Radial, ctl).ratio - a) <= 1e-8);
}

TEST_CASE("too small a cutoff is reported") {
  const WedgeConfig cfg(1);
  oracle::ModeSumControl ctl;
  ctl.m_max = 2;
  CHECK_THROWS_AS(oracle::mode_sum_decay(cfg, {40.0, 1.0}, Orientation::Axial, ctl), NumericError);
  ctl.m_max = 3000;
  CHECK_THROWS_AS(oracle::mode_sum_decay(cfg, {4.0, 1.0}, Orientation::Axial, ctl), CapabilityError);
  ctl.m_max = 0;
  CHECK_THROWS_AS(oracle::mode_sum_decay(cfg, {4.0, 1.0}, Orientation::Axial, ctl), DomainError);
  CHECK_THROWS_AS(oracle::mode_sum_decay(cfg, {4.0, 0.0}, Orientation::Axial, {}), DomainError);
}

TEST_CASE("Graf addition theorem") {
  const oracle::GrafCase cases[] = {
      {1, 1.0, 0.5, 1.0, 0.0}, {2, 0.3, 0.2, 1.7, 1.1}, {3, 4.0, 0.9, 1.0, 2.5},
      {5, 2.2, 0.1, 0.6, 5.9}, {4, 0.1, 1.2, 1.3, 0.01},
  };
  for (const auto& c : cases) {
    CHECK(oracle::graf_residual(c, 2000 / c.p) < 1e-10);
  }
  const oracle::GrafCase slow{1, 1.0, 0.9, 1.0, 0.4};
  CHECK(oracle::graf_residual(slow, 8) > oracle::graf_residual(slow, 400));
  CHECK_THROWS_AS(oracle::graf_residual({1, 1.0, 1.0, 0.5, 0.0}, 100), DomainError);
  CHECK_THROWS_AS(oracle::graf_residual({1, 1.0, 0.5, 1.0, 0.0}, 2), DomainError);
}

TEST_CASE("guided-mode count: hand-evaluated values") {
  // One TE-like mode at d = 3/4 on the midplane: (3/4d)(1 + (2/3)^2) = 13/9.
  CHECK(oracle::plates_mode_sum({0.75, 0.375}, PlaneOrientation::Parallel) ==
        doctest::Approx(13.0 / 9.0).epsilon(1e-15));
  // Below the first cutoff only the k = 0 mode remains for the perpendicular dipole.
  CHECK(oracle::plates_mode_sum({0.4, 0.1}, PlaneOrientation::Perpendicular) ==
        doctest::Approx(0.75 / 0.4).epsilon(1e-15));
  CHECK(oracle::plates_mode_sum({0.4, 0.1}, PlaneOrientation::Parallel) == 0.0);
  CHECK_THROWS_AS(oracle::plates_mode_sum({1.0, 1.0}, PlaneOrientation::Parallel), DomainError);
}

TEST_CASE("kernel spot check") {
  for (double x : {0.0, 1e-4, 0.4, 0.6, 1.0, 3.0, 40.0, 1e3}) {
    const auto s = oracle::kernel_spot_check(x);
    CHECK(s.x == x);
    CHECK(s.max_abs_diff <= 2e-15);
  }
  CHECK_THROWS_AS(oracle::kernel_spot_check(-1.0), DomainError);
}

}  // TEST_SUITE
