#include <benchmark/benchmark.h>

#include "wedgeqed/specfun.hpp"

namespace sf = wedgeqed::specfun;

static void BM_KernelTriple(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::kernel_triple(x));
    x = x < 200.0 ? x * 1.01 : 0.1;
  }
}
BENCHMARK(BM_KernelTriple);

static void BM_BesselJ012(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_j012(x));
}
BENCHMARK(BM_BesselJ012)->Arg(1)->Arg(10)->Arg(100);

static void BM_BesselJSequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_j_sequence(n, 0.5 * n));
}
BENCHMARK(BM_BesselJSequence)->Arg(10)->Arg(100)->Arg(1000);

static void BM_LogBesselK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::log_bessel_k(n, 3.0));
}
BENCHMARK(BM_LogBesselK)->Arg(0)->Arg(50)->Arg(1000);
