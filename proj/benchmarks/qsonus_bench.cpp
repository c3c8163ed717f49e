// Copyright 2026 The qsonus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qsonus/gates.hpp"
#include "qsonus/measurement.hpp"
#include "qsonus/qft.hpp"
#include "qsonus/random.hpp"
#include "qsonus/sawtooth.hpp"

namespace {

using namespace qsonus;

StateVector spread_state(int n) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = std::polar(std::sqrt(1.0 / static_cast<double>(amps.size())), 0.37 * static_cast<double>(i % 97));
  return StateVector::from_amplitudes(std::move(amps));
}

void BM_Hadamard(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto s = spread_state(n);
  GateContext ctx(NoiseModel{0.05, NoiseDistribution::Gaussian, 1, 0});
  for (auto _ : st) {
    apply_hadamard(s, Qubit{n / 2}, ctx);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Hadamard)->Arg(14)->Arg(18);

void BM_ControlledPhase(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto s = spread_state(n);
  GateContext ctx(NoiseModel{0.05, NoiseDistribution::Gaussian, 1, 0});
  for (auto _ : st) {
    apply_controlled_phase(s, Qubit{1}, Qubit{n}, 0.3, ctx);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ControlledPhase)->Arg(14)->Arg(18);

void BM_QftLowQubits(benchmark::State& st) {
  const int n = 16;
  const int nf = static_cast<int>(st.range(0));
  auto s = spread_state(n);
  const FramePlan plan(n, nf);
  GateContext ctx;
  for (auto _ : st) {
    qft_low_qubits(s, plan, ctx);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_QftLowQubits)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_EstimateSpectrum(benchmark::State& st) {
  const auto s = spread_state(16);
  const MeasurementPlan plan{MeasurementMode::TotalMultinomial, static_cast<std::uint64_t>(st.range(0)),
                             FramePlan(16, 9)};
  CounterRng rng(1, 0);
  for (auto _ : st) benchmark::DoNotOptimize(estimate_spectrum(s, plan, rng));
}
BENCHMARK(BM_EstimateSpectrum)->Arg(5)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SawtoothIteration(benchmark::State& st) {
  const auto params = SawtoothParams::from_chaos(static_cast<int>(st.range(0)), -0.5, 1);
  auto s = momentum_eigenstate(params, 100);
  GateContext ctx;
  for (auto _ : st) {
    iterate_map(s, params, ctx);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SawtoothIteration)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
