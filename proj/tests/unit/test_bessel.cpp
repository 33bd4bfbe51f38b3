#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "doctest.h"
#include "reference.hpp"
#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"

namespace sf = wedgeqed::specfun;
namespace bm = boost::math;

TEST_SUITE("bessel") {

TEST_CASE("J_n matches Boost across the branch boundaries") {
  for (int n : {0, 1, 2, 3, 7, 12, 30, 100, 400}) {
    for (double x : {1e-3, 0.1, 1.0, 2.0, 4.9, 5.1, 10.0, 24.9, 25.0, 31.0, 60.0, 100.0, 250.0, 900.0}) {
      INFO("n = " << n << ", x = " << x);
      const double want = bm::cyl_bessel_j(n, x);
      CHECK(std::abs(sf::bessel_j(n, x) - want) <= 2e-14 + 1e-12 * std::abs(want));
    }
  }
}

TEST_CASE("first zero of J_0 located on an independent series") {
  long double lo = 2.0L;
  long double hi = 3.0L;
  for (int i = 0; i < 80; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (ref::j0_series(lo) * ref::j0_series(mid) <= 0.0L ? hi : lo) = mid;
  }
  const double z = static_cast<double>(0.5L * (lo + hi));
  CHECK(std::abs(sf::bessel_j(0, z)) <= 1e-15);
  CHECK(sf::bessel_j(1, z) > 0.5);
}

TEST_CASE("derivative matches a central difference") {
  const double h = 1e-5;
  for (int n : {0, 1, 4, 20}) {
    for (double x : {0.3, 3.0, 17.0, 40.0}) {
      const double fd = (sf::bessel_j(n, x + h) - sf::bessel_j(n, x - h)) / (2.0 * h);
      CHECK(std::abs(sf::bessel_j_prime(n, x) - fd) <= 1e-9);
    }
  }
  CHECK(sf::bessel_j_prime(1, 0.0) == 0.5);
  CHECK(sf::bessel_j_prime(0, 0.0) == 0.0);
}

TEST_CASE("sequence is consistent with single orders and the recurrence") {
  for (double x : {0.7, 8.0, 33.0, 140.0}) {
    const auto js = sf::bessel_j_sequence(60, x);
    REQUIRE(js.size() == 61);
    for (int n = 1; n < 60; ++n) {
      CHECK(std::abs(js[n - 1] + js[n + 1] - 2.0 * n / x * js[n]) <= 1e-13 * (1.0 + 2.0 * n / x));
    }
    for (int n : {0, 1, 2, 10, 59}) CHECK(std::abs(js[n] - sf::bessel_j(n, x)) <= 1e-14);
    const auto j3 = sf::bessel_j012(x);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(j3[n] - js[n]) <= 1e-14);
  }
}

TEST_CASE("Neumann sum rule") {
  for (double x : {0.5, 12.0, 75.0, 500.0}) {
    const int top = static_cast<int>(x) + 60;
    const auto js = sf::bessel_j_sequence(top, x);
    double s = js[0] * js[0];
    for (int k = 1; k <= top; ++k) s += 2.0 * js[k] * js[k];
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("I_n and K_n match Boost") {
  for (int n : {0, 1, 2, 5, 20}) {
    for (double x : {1e-3, 0.05, 0.5, 2.0, 10.0, 50.0, 300.0}) {
      INFO("n = " << n << ", x = " << x);
      const double i_want = bm::cyl_bessel_i(n, x);
      if (i_want > 1e-300 && std::isfinite(i_want)) {
        CHECK(sf::bessel_i(n, x) == doctest::Approx(i_want).epsilon(1e-12));
      }
      const double k_want = bm::cyl_bessel_k(n, x);
      if (k_want > 1e-300 && std::isfinite(k_want)) {
        CHECK(sf::bessel_k(n, x) == doctest::Approx(k_want).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("small-argument K_0") {
  for (double x : {1e-8, 1e-5, 1e-3}) {
    const double lead = -std::log(0.5 * x) - 0.57721566490153286;
    CHECK(sf::bessel_k(0, x) == doctest::Approx(lead).epsilon(1e-5));
  }
}

TEST_CASE("Wronskian I_n K_{n+1} + I_{n+1} K_n = 1/x, in log space at high order") {
  for (int n : {0, 3, 50, 500, 1500}) {
    for (double x : {0.2, 3.0, 40.0}) {
      const double a = sf::log_bessel_i(n, x) + sf::log_bessel_k(n + 1, x) + std::log(x);
      const double b = sf::log_bessel_i(n + 1, x) + sf::log_bessel_k(n, x) + std::log(x);
      CHECK(std::exp(a) + std::exp(b) == doctest::Approx(1.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("order caps and domain") {
  using wedgeqed::CapabilityError;
  using wedgeqed::DomainError;
  CHECK_THROWS_AS(sf::bessel_j(sf::kMaxBesselOrder + 1, 1.0), CapabilityError);
  CHECK_THROWS_AS(sf::bessel_j(-1, 1.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_j(0, -1.0), DomainError);
  CHECK_THROWS_AS(sf::log_bessel_k(0, 0.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_i(0, 800.0), CapabilityError);
  CHECK_THROWS_AS(sf::bessel_k(500, 0.1), CapabilityError);
  CHECK(std::isfinite(sf::log_bessel_k(500, 0.1)));
  CHECK(sf::bessel_j(0, 0.0) == 1.0);
  CHECK(sf::bessel_j(3, 0.0) == 0.0);
}

}  // TEST_SUITE
