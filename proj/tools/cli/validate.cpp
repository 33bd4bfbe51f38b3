#include "validate.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

#include "usage_error.hpp"
#include "wedgeqed/wedgeqed.hpp"

namespace wedgeqed::cli {
namespace {

constexpr double kPi = std::numbers::pi;

CheckResult check(const std::string& suite, std::string name, double value, double tol) {
  return {suite, std::move(name), value, tol, std::isfinite(value) && value <= tol};
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<CheckResult> kernels() {
  std::vector<CheckResult> out;
  for (double x : {0.0, 1e-3, 0.05, 0.3, 0.7, 0.999, 1.0, 1.001, 2.0, 7.5, 30.0, 150.0}) {
    const auto s = oracle::kernel_spot_check(x);
    if (x <= 1.0) {
      out.push_back(check("kernels", fmt("extended-precision x=%g rel", x), s.max_rel_diff, 1e-14));
    } else {
      out.push_back(check("kernels", fmt("extended-precision x=%g abs", x), s.max_abs_diff, 1e-14));
    }
  }
  double glue = 0.0;
  for (double x = 0.01; x < 200.0; x *= 1.07) {
    glue = std::max(glue, std::abs(specfun::kernel_a(x) - specfun::sinc(x) - specfun::kernel_c(x)));
  }
  out.push_back(check("kernels", "A - sinc - C on (0, 200)", glue, 1e-13));
  double band = 0.0;
  for (double x = 0.9; x <= 1.1; x += 0.005) {
    band = std::max(band, std::abs(specfun::detail::kernel_c_series(x) -
                                   specfun::detail::kernel_c_direct(x)));
    band = std::max(band, std::abs(specfun::detail::sinc_series(x) - specfun::detail::sinc_direct(x)));
  }
  out.push_back(check("kernels", "series/direct crossover band", band, 1e-12));
  double wr = 0.0;
  for (double x : {0.5, 2.0, 10.0}) {
    const double w = specfun::bessel_i(0, x) * specfun::bessel_k(1, x) +
                     specfun::bessel_i(1, x) * specfun::bessel_k(0, x);
    wr = std::max(wr, std::abs(w * x - 1.0));
  }
  out.push_back(check("kernels", "I/K Wronskian", wr, 1e-12));
  double sum_rule = 0.0;
  for (double x : {0.5, 5.0, 40.0, 150.0}) {
    const int top = static_cast<int>(std::ceil(x)) + 40;
    const auto js = specfun::bessel_j_sequence(top, x);
    double s = js[0] * js[0];
    for (int k = 1; k <= top; ++k) s += 2.0 * js[k] * js[k];
    sum_rule = std::max(sum_rule, std::abs(s - 1.0));
  }
  out.push_back(check("kernels", "J sum rule", sum_rule, 1e-10));
  return out;
}

std::vector<CheckResult> mode_sum() {
  std::vector<CheckResult> out;
  for (int p : {1, 2, 3}) {
    const WedgeConfig cfg(p);
    for (double frac : {0.25, 0.5}) {
      for (double chi : {1.0, 5.0, 20.0}) {
        const AtomLocation loc{chi, frac * cfg.alpha()};
        const auto ctl = oracle::ModeSumControl::adaptive(cfg, loc);
        for (auto o : {Orientation::Radial, Orientation::Polar, Orientation::Axial}) {
          const double a = wedge_decay(cfg, loc, o).ratio;
          const double b = oracle::mode_sum_decay(cfg, loc, o, ctl).ratio;
          char name[96];
          std::snprintf(name, sizeof name, "p=%d theta0=%.2g*alpha chi=%g %s", p, frac, chi,
                        std::string(to_string(o)).c_str());
          out.push_back(check("oracle", name, std::abs(a - b) / std::max(std::abs(b), 1e-300), 1e-6));
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> graf(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_p(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    oracle::GrafCase c;
    c.p = pick_p(rng);
    c.zeta = 0.1 + 4.9 * unit(rng);
    c.r2 = 0.5 + 1.5 * unit(rng);
    c.r1 = c.r2 * (0.1 + 0.8 * unit(rng));
    c.phi = 2.0 * kPi * unit(rng);
    const int m_max = 2000 / c.p;
    char name[128];
    std::snprintf(name, sizeof name, "case %03d p=%d zeta=%.3f r1/r2=%.3f phi=%.3f", i, c.p,
                  c.zeta, c.r1 / c.r2, c.phi);
    out.push_back(check("graf", name, oracle::graf_residual(c, m_max), 1e-10));
  }
  return out;
}

std::vector<CheckResult> plates() {
  std::vector<CheckResult> out;
  for (double yf : {0.25, 0.5, 0.75}) {
    const double r = plates_decay({0.4, 0.4 * yf}, PlaneOrientation::Parallel).ratio;
    out.push_back(check("plates", fmt("suppression d/lambda=0.4 y/d=%g", yf), r, 0.02));
  }
  for (double d : {0.45, 0.8, 1.3, 2.2, 3.7}) {
    for (double yf : {0.2, 0.5, 0.85}) {
      const PlatesGeometry g{d, yf * d};
      for (auto o : {PlaneOrientation::Parallel, PlaneOrientation::Perpendicular}) {
        char name[96];
        std::snprintf(name, sizeof name, "mode count d/lambda=%g y/d=%g %s", d, yf,
                      std::string(to_string(o)).c_str());
        const double a = plates_decay(g, o).ratio;
        out.push_back(check("plates", name, std::abs(a - oracle::plates_mode_sum(g, o)), 1e-5));
      }
    }
  }
  double sym = 0.0;
  for (double d : {0.7, 1.9, 4.2}) {
    for (double yf : {0.1, 0.3, 0.45}) {
      for (auto o : {PlaneOrientation::Parallel, PlaneOrientation::Perpendicular}) {
        sym = std::max(sym, std::abs(plates_decay({d, yf * d}, o).ratio -
                                     plates_decay({d, d - yf * d}, o).ratio));
      }
    }
  }
  out.push_back(check("plates", "midplane symmetry", sym, 1e-12));
  return out;
}

std::vector<CheckResult> halfsheet() {
  std::vector<CheckResult> out;
  const double w = 4.0 * kPi;
  const double len = 1e4;
  const HalfSheetLocation far{std::hypot(len, w), std::atan2(w, len)};
  const auto [perp, par] = halfsheet_far_limits(w);
  out.push_back(check("halfsheet", "far limit z (w=4pi, L=1e4)",
                      std::abs(halfsheet_decay_z(far).ratio - par), 1e-4));
  out.push_back(check("halfsheet", "far limit y (w=4pi, L=1e4)",
                      std::abs(halfsheet_decay_y(far).ratio - perp), 1e-4));
  double sym = 0.0;
  for (double th : {0.2, 0.9, 1.5, 2.4, 3.0}) {
    const HalfSheetLocation a{4.0 * kPi * 5.0, th};
    const HalfSheetLocation b{4.0 * kPi * 5.0, 2.0 * kPi - th};
    sym = std::max(sym, std::abs(halfsheet_decay_z(a).ratio - halfsheet_decay_z(b).ratio));
    sym = std::max(sym, std::abs(halfsheet_decay_y(a).ratio - halfsheet_decay_y(b).ratio));
  }
  out.push_back(check("halfsheet", "mirror symmetry about pi", sym, 1e-10));
  double stab = 0.0;
  HalfSheetKernelState tight;
  tight.rel_tol *= 0.5;
  tight.max_panels *= 2;
  for (double th : {0.4, 1.2, 2.5}) {
    const HalfSheetLocation loc{4.0 * kPi, th};
    stab = std::max(stab, std::abs(halfsheet_decay_z(loc).ratio - halfsheet_decay_z(loc, tight).ratio));
    stab = std::max(stab, std::abs(halfsheet_decay_y(loc).ratio - halfsheet_decay_y(loc, tight).ratio));
  }
  out.push_back(check("halfsheet", "tolerance halving", stab, 1e-8));
  return out;
}

std::vector<CheckResult> shifts() {
  std::vector<CheckResult> out;
  const auto sp = shift::ShiftParams::standard();
  for (double g : {0.5, 1.0, 5.0, 20.0}) {
    const double a = wedge_shift_ratio(WedgeConfig(1), g, 0.5 * kPi, sp).ratio;
    const double b = halfsheet_shift_far(g, sp).ratio;
    out.push_back(check("shift", fmt("wedge p=1 vs plane, 2*gamma*r0=%g", g), std::abs(a - b), 1e-9));
  }
  const auto one = shift::shift_weighted_integral({[](double) { return 1.0; }, 0.0}, sp);
  out.push_back(check("shift", "constant bracket", std::abs(one.ratio - shift::free_space_weight(sp)), 1e-10));
  out.push_back(check("shift", "far distance 2*gamma*r0=50",
                      std::abs(halfsheet_shift_far(50.0, sp).ratio - 1.0), 1e-2));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernels", "oracle",    "graf",
                                                 "plates",  "halfsheet", "shift"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "kernels") return kernels();
  if (suite == "oracle") return mode_sum();
  if (suite == "graf") return graf(seed);
  if (suite == "plates") return plates();
  if (suite == "halfsheet") return halfsheet();
  if (suite == "shift") return shifts();
  throw UsageError("unknown suite '" + suite + "'");
}

bool report(const std::vector<CheckResult>& results, std::ostream& os) {
  std::map<std::string, std::pair<int, int>> tally;
  std::vector<std::string> order;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-9s  %-52s  %.3e  (tol %.1e)\n", r.pass ? "PASS" : "FAIL",
                  r.suite.c_str(), r.name.c_str(), r.value, r.tol);
    os << line;
    auto [it, fresh] = tally.try_emplace(r.suite, 0, 0);
    if (fresh) order.push_back(r.suite);
    it->second.first += r.pass ? 1 : 0;
    it->second.second += 1;
  }
  bool ok = true;
  for (const auto& s : order) {
    const auto [pass, total] = tally[s];
    os << "suite " << s << ": " << pass << "/" << total << " passed\n";
    ok = ok && pass == total;
  }
  return ok;
}

}  // namespace wedgeqed::cli
