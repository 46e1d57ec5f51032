#include <benchmark/benchmark.h>

#include "mzsim/experiments.hpp"
#include "mzsim/sweep.hpp"

namespace {

mzsim::ExperimentConfig quantum_delayed(mzsim::Mode mode) {
  mzsim::ExperimentConfig cfg;
  cfg.variant = mzsim::Variant::quantum_delayed;
  cfg.mode = mode;
  cfg.alphas = mzsim::default_alpha_grid();
  return cfg;
}

void BM_QuantumDelayedIdeal(benchmark::State& state) {
  const auto cfg = quantum_delayed(mzsim::Mode::ideal_gate);
  for (auto _ : state) benchmark::DoNotOptimize(mzsim::sweep(cfg, 1));
}
BENCHMARK(BM_QuantumDelayedIdeal);

void BM_QuantumDelayedPulse(benchmark::State& state) {
  const auto cfg = quantum_delayed(mzsim::Mode::pulse_sequence);
  for (auto _ : state) benchmark::DoNotOptimize(mzsim::sweep(cfg, 1));
}
BENCHMARK(BM_QuantumDelayedPulse);

void BM_SinglePoint(benchmark::State& state) {
  const auto cfg = quantum_delayed(mzsim::Mode::ideal_gate);
  for (auto _ : state) benchmark::DoNotOptimize(mzsim::run_quantum_delayed(0.7, 1.3, cfg));
}
BENCHMARK(BM_SinglePoint);

void BM_WheelerShots(benchmark::State& state) {
  mzsim::ExperimentConfig cfg;
  cfg.variant = mzsim::Variant::wheeler;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzsim::run_wheeler(0.0, cfg, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_WheelerShots)->Arg(1000)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
