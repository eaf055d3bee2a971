// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "qkdsim/analysis.hpp"
#include "qkdsim/engine.hpp"

namespace {

using namespace qkdsim;

static void RunPhotonCounting(benchmark::State& state) {
  RunConfig c;
  c.receiver = Receiver::PhotonCounting;
  c.n_symbols = static_cast<std::uint64_t>(state.range(0));
  c.mean_photons_per_bit = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(c).stats);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(RunPhotonCounting)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMillisecond);

static void RunHomodyne(benchmark::State& state) {
  RunConfig c;
  c.receiver = Receiver::Homodyne;
  c.n_symbols = static_cast<std::uint64_t>(state.range(0));
  c.mean_photons_per_bit = 1.0;
  c.channel.drift_sigma = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(c).stats);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(RunHomodyne)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMillisecond);

static void RunWithTrace(benchmark::State& state) {
  RunConfig c;
  c.receiver = Receiver::Homodyne;
  c.n_symbols = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(c, c.n_symbols).trace.data());
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(RunWithTrace)->Unit(benchmark::kMillisecond);

static void Sweep(benchmark::State& state) {
  RunConfig c;
  c.n_symbols = 100000;
  const std::vector<double> values{0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sweep(c, "channel.loss_db", values, {static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void QberTheoryPc(benchmark::State& state) {
  double mu = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qber_theory_pc(mu, 0.1, 0.98, 1e-4));
    mu += 1e-9;
  }
}
BENCHMARK(QberTheoryPc);

static void WilsonInterval(benchmark::State& state) {
  std::uint64_t errors = 228;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wilson_interval(errors, 10000, 0.95));
    errors = (errors + 1) % 10000;
  }
}
BENCHMARK(WilsonInterval);

}  // namespace

BENCHMARK_MAIN();
