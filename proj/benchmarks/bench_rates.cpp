#include <benchmark/benchmark.h>

#include <numbers>

#include "wedgeqed/wedgeqed.hpp"

using namespace wedgeqed;

static void BM_WedgeDecay(benchmark::State& state) {
  const WedgeConfig cfg(static_cast<int>(state.range(0)));
  const AtomLocation loc{25.0, 0.5 * cfg.alpha()};
  for (auto _ : state) benchmark::DoNotOptimize(wedge_decay(cfg, loc, Orientation::Radial));
}
BENCHMARK(BM_WedgeDecay)->Arg(1)->Arg(3)->Arg(40)->Arg(500);

static void BM_PlatesDecay(benchmark::State& state) {
  const double d = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plates_decay({d, 0.37 * d}, PlaneOrientation::Parallel));
  }
}
BENCHMARK(BM_PlatesDecay)->Arg(70)->Arg(230)->Arg(490)->Unit(benchmark::kMicrosecond);

static void BM_HalfSheetDecayY(benchmark::State& state) {
  const HalfSheetLocation loc{4.0 * std::numbers::pi * state.range(0), 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(halfsheet_decay_y(loc));
}
BENCHMARK(BM_HalfSheetDecayY)->Arg(1)->Arg(5)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_WedgeShift(benchmark::State& state) {
  const WedgeConfig cfg(static_cast<int>(state.range(0)));
  const auto sp = shift::ShiftParams::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge_shift_ratio(cfg, 2.0, 0.5 * cfg.alpha(), sp));
  }
}
BENCHMARK(BM_WedgeShift)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ModeSumOracle(benchmark::State& state) {
  const WedgeConfig cfg(2);
  const AtomLocation loc{static_cast<double>(state.range(0)), 0.4};
  const auto ctl = oracle::ModeSumControl::adaptive(cfg, loc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::mode_sum_decay(cfg, loc, Orientation::Axial, ctl));
  }
}
BENCHMARK(BM_ModeSumOracle)->Arg(5)->Arg(20)->Unit(benchmark::kMicrosecond);
