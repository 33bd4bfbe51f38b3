#include "wedgeqed/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "wedgeqed/errors.hpp"

namespace wedgeqed::quad {
namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;  // deterministic tie-break
  }
};

double eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (std::isnan(y)) {
    throw NumericError("integrate: integrand returned NaN at x = " + std::to_string(x),
                       std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::infinity());
  }
  return y;
}

Panel kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = eval(f, c);
  double gauss = fc * kWg[3];
  double kron = fc * kWgk[7];
  double resabs = std::abs(kron);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    f1[j] = eval(f, c - dx);
    f2[j] = eval(f, c + dx);
    const double s = f1[j] + f2[j];
    kron += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  const double mean = 0.5 * kron;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((kron - gauss) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return {a, b, kron * h, err};
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
    throw DomainError("QuadratureSpec: tolerances must be positive");
  }
  if (spec.max_panels < 8) throw DomainError("QuadratureSpec: max_panels must be >= 8");
  if (spec.oscillation_period_hint && !(*spec.oscillation_period_hint > 0.0)) {
    throw DomainError("QuadratureSpec: oscillation_period_hint must be positive");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  validate(spec);
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: limits must be finite");
  }
  if (a == b) return {0.0, 0.0, 0, true};
  const double sign = b < a ? -1.0 : 1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  int initial = 1;
  if (spec.oscillation_period_hint) {
    const double n = std::ceil((hi - lo) / (0.5 * *spec.oscillation_period_hint));
    initial = static_cast<int>(std::min(n, static_cast<double>(spec.max_panels)));
    initial = std::max(initial, 1);
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  double total = 0.0;
  double total_err = 0.0;
  const double width = (hi - lo) / initial;
  for (int i = 0; i < initial; ++i) {
    const double pa = lo + i * width;
    const double pb = i + 1 == initial ? hi : lo + (i + 1) * width;
    Panel p = kronrod(f, pa, pb);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  int panels = initial;
  auto done = [&] { return total_err <= std::max(spec.rel_tol * std::abs(total), spec.abs_tol); };
  while (!done() && panels < spec.max_panels) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // panel at machine resolution
    heap.pop();
    const Panel left = kronrod(f, worst.a, mid);
    const Panel right = kronrod(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++panels;
    // Re-summing avoids drift from repeated add/subtract of large errors.
    if (panels % 64 == 0) {
      total = 0.0;
      total_err = 0.0;
      auto copy = heap;
      std::vector<Panel> all;
      all.reserve(copy.size());
      while (!copy.empty()) {
        all.push_back(copy.top());
        copy.pop();
      }
      std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
      for (const Panel& p : all) {
        total += p.value;
        total_err += p.error;
      }
    } else {
      total += left.value + right.value - worst.value;
      total_err += left.error + right.error - worst.error;
      total_err = std::max(total_err, 0.0);
    }
  }

  // Final sum in interval order so the result does not depend on heap layout.
  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  total = 0.0;
  total_err = 0.0;
  for (const Panel& p : all) {
    total += p.value;
    total_err += p.error;
  }
  QuadratureResult r;
  r.value = sign * total;
  r.est_error = total_err;
  r.panels = panels;
  r.converged = done();
  return r;
}

}  // namespace wedgeqed::quad
