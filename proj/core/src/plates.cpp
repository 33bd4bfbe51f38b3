#include "wedgeqed/plates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "wedgeqed/errors.hpp"
#include "wedgeqed/specfun.hpp"
#include "wedgeqed/wedge.hpp"

namespace wedgeqed {
namespace {

constexpr int kFirstCheck = 64;

void require_geometry(const PlatesGeometry& g) {
  const double d = g.d_over_lambda;
  const double y = g.y_over_lambda;
  if (!std::isfinite(d) || !std::isfinite(y) || !(d > 0.0) || !(y > 0.0) || !(y < d)) {
    throw DomainError("plates: need 0 < y < d, got d/lambda = " + std::to_string(d) +
                      ", y/lambda = " + std::to_string(y));
  }
}

void require_control(const SeriesControl& c) {
  if (c.max_images < 1) throw DomainError("plates: max_images must be >= 1");
  if (!(c.tail_tol > 0.0)) throw DomainError("plates: tail_tol must be > 0");
  if (c.euler_depth < 1) throw DomainError("plates: euler_depth must be >= 1");
}

// Image pair k (k >= 1). The two mirror families are paired as
// (k v - u, (k-1) v + u) so the k-th term is invariant under u -> v - u and
// the truncated sum keeps the midplane symmetry exactly.
double image_term(int k, double u, double v, PlaneOrientation o) {
  const double near = k * v - u;
  const double far = (k - 1) * v + u;
  if (o == PlaneOrientation::Parallel) {
    using specfun::kernel_a;
    return 3.0 * kernel_a(k * v) - 1.5 * (kernel_a(near) + kernel_a(far));
  }
  using specfun::kernel_c;
  return -6.0 * kernel_c(k * v) - 3.0 * (kernel_c(near) + kernel_c(far));
}

// sums[i] holds the partial sum over images 1..i+1.
double accelerated(const std::vector<double>& sums, int n, const SeriesControl& ctl) {
  switch (ctl.acceleration) {
    case Acceleration::None:
      return sums[n - 1];
    case Acceleration::PairAveraging: {
      // Mean of the partial sums over (n/2, n]: a sin(k v)/k tail averages out
      // to O(1/n^2) away from the mode thresholds.
      double acc = 0.0;
      for (int i = n / 2; i < n; ++i) acc += sums[i];
      return acc / (n - n / 2);
    }
    case Acceleration::EulerTransform: {
      const int depth = std::min(ctl.euler_depth, n - 1);
      std::vector<double> w(sums.begin() + (n - 1 - depth), sums.begin() + n);
      for (int level = 0; level < depth; ++level) {
        for (size_t i = 0; i + 1 < w.size() - level; ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
      }
      return w[0];
    }
  }
  return sums[n - 1];
}

double spread(const std::vector<double>& sums, int n) {
  const auto first = sums.begin() + n / 2;
  const auto last = sums.begin() + n;
  const auto [lo, hi] = std::minmax_element(first, last);
  return *hi - *lo;
}

}  // namespace

RateResult plates_decay(const PlatesGeometry& geom, PlaneOrientation o, const SeriesControl& ctl) {
  require_geometry(geom);
  require_control(ctl);
  const double v = 4.0 * std::numbers::pi * geom.d_over_lambda;
  const double u = 4.0 * std::numbers::pi * geom.y_over_lambda;

  std::vector<double> sums;
  sums.reserve(static_cast<size_t>(std::min(ctl.max_images, 1 << 20)));
  double running = 0.0;
  auto extend_to = [&](int n) {
    for (int k = static_cast<int>(sums.size()) + 1; k <= n; ++k) {
      running += image_term(k, u, v, o);
      sums.push_back(running);
    }
  };

  RateResult r;
  r.axis = o;
  int n = std::min(kFirstCheck, ctl.max_images);
  double prev = 0.0;
  bool have_prev = false;
  while (true) {
    extend_to(n);
    const double est = accelerated(sums, n, ctl);
    double err;
    if (ctl.acceleration == Acceleration::None) {
      err = spread(sums, n);
    } else {
      err = have_prev ? std::abs(est - prev) : std::numeric_limits<double>::infinity();
    }
    r.ratio = 1.0 + est;
    r.terms_used = n;
    r.est_error = err;
    if (err <= ctl.tail_tol) return r;
    if (n >= ctl.max_images) break;
    prev = est;
    have_prev = true;
    n = static_cast<int>(std::min<long long>(2LL * n, ctl.max_images));
  }
  throw NumericError("plates image series not converged after " + std::to_string(n) +
                         " images (estimated error " + std::to_string(r.est_error) + ")",
                     r.ratio, r.est_error);
}

RateResult plates_limit_oracle(const PlatesGeometry& geom, Orientation o, int p_large) {
  require_geometry(geom);
  if (p_large < 100) {
    throw DomainError("plates_limit_oracle: p_large must be >= 100, got " +
                      std::to_string(p_large));
  }
  const double d = geom.d_over_lambda;
  AtomLocation loc;
  loc.chi = 4.0 * d * p_large;
  loc.theta0 = std::numbers::pi * geom.y_over_lambda / (d * p_large);
  return wedge_decay(WedgeConfig(p_large), loc, o);
}

}  // namespace wedgeqed
