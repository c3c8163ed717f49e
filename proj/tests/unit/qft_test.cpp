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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qsonus/errors.hpp"
#include "qsonus/fft.hpp"
#include "qsonus/qft.hpp"

namespace {

using namespace qsonus;
using oracle::cd;

std::vector<cd> as_vector(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

TEST(FramePlan, Shape) {
  const FramePlan plan(12, 5);
  EXPECT_EQ(plan.frame_size(), 32u);
  EXPECT_EQ(plan.frame_count(), 128u);
  EXPECT_EQ(plan.frame_size() * plan.frame_count(), 4096u);
  EXPECT_EQ(plan.first_frame_qubit(), Qubit{8});
  EXPECT_THROW(FramePlan(4, 5), ArgumentError);
  EXPECT_THROW(FramePlan(4, 0), ArgumentError);
}

TEST(Qft, SingleQubitIsHadamard) {
  StateVector s(1);
  GateContext ctx;
  qft_low_qubits(s, FramePlan(1, 1), ctx);
  EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Qft, FramewiseMatchesPerFrameDft) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    const auto v = oracle::random_state(std::size_t{1} << 12, rng);
    auto s = StateVector::from_amplitudes(v);
    GateContext ctx;
    qft_low_qubits(s, FramePlan(12, 5), ctx);
    EXPECT_LT(oracle::max_error(as_vector(s), oracle::framewise_dft(v, 32, +1)), 1e-10);
  }
}

TEST(Qft, FramewiseMatchesForAllSmallPlans) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 8; ++n)
    for (int f = 1; f <= n; ++f) {
      const auto v = oracle::random_state(std::size_t{1} << n, rng);
      auto s = StateVector::from_amplitudes(v);
      GateContext ctx;
      qft_low_qubits(s, FramePlan(n, f), ctx);
      EXPECT_LT(oracle::max_error(as_vector(s), oracle::framewise_dft(v, std::size_t{1} << f, +1)), 1e-10)
          << n << " " << f;
      inverse_qft_low_qubits(s, FramePlan(n, f), ctx);
      EXPECT_LT(oracle::max_error(as_vector(s), v), 1e-10);
    }
}

TEST(Qft, GateCountLaw) {
  EXPECT_EQ(qft_rotation_count(9), 45u);
  for (int f = 1; f <= 12; ++f) {
    StateVector s(12);
    GateContext ctx;
    qft_low_qubits(s, FramePlan(12, f), ctx);
    const auto nf = static_cast<std::uint64_t>(f);
    EXPECT_EQ(ctx.tally().hadamards, nf);
    EXPECT_EQ(ctx.tally().controlled_phases, nf * (nf - 1) / 2);
    EXPECT_EQ(ctx.tally().rotations(), nf * (nf + 1) / 2);
    EXPECT_EQ(ctx.tally().swaps, nf / 2);
  }
}

TEST(Qft, FullOnZeroIsUniform) {
  StateVector s(3);
  GateContext ctx;
  qft_full(s, ctx);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(s[i] - cd(1.0 / std::sqrt(8.0))), 0.0, 1e-15);
}

TEST(Qft, FullRoundTrip) {
  std::mt19937_64 rng(14);
  const auto v = oracle::random_state(1024, rng);
  auto s = StateVector::from_amplitudes(v);
  GateContext ctx;
  qft_full(s, ctx);
  inverse_qft_full(s, ctx);
  EXPECT_LT(oracle::max_error(as_vector(s), v), 1e-10);
}

TEST(Qft, FullMatchesDenseDftMatrix) {
  std::mt19937_64 rng(15);
  const auto v = oracle::random_state(256, rng);
  auto s = StateVector::from_amplitudes(v);
  GateContext ctx;
  qft_full(s, ctx);
  EXPECT_LT(oracle::max_error(as_vector(s), oracle::apply(oracle::dft_matrix(256, +1), v)), 1e-10);
  inverse_qft_full(s, ctx);
  EXPECT_LT(oracle::max_error(as_vector(s), v), 1e-10);
}

double mean_infidelity(double eps, NoiseDistribution dist, int realizations) {
  const int n = 9;
  std::mt19937_64 rng(77);
  const auto v = oracle::random_state(std::size_t{1} << n, rng);
  auto ideal = StateVector::from_amplitudes(v);
  GateContext exact;
  qft_low_qubits(ideal, FramePlan(n, n), exact);
  double sum = 0.0;
  for (int r = 0; r < realizations; ++r) {
    auto s = StateVector::from_amplitudes(v);
    GateContext ctx(NoiseModel{eps, dist, 5, static_cast<std::uint64_t>(r)});
    qft_low_qubits(s, FramePlan(n, n), ctx);
    sum += 1.0 - std::norm(inner_product(ideal, s));
  }
  return sum / realizations;
}

TEST(Qft, NoiseContinuity) {
  EXPECT_NEAR(mean_infidelity(0.0, NoiseDistribution::Gaussian, 3), 0.0, 1e-14);
  double previous = 0.0;
  for (double eps : {0.01, 0.02, 0.05, 0.1}) {
    const double loss = mean_infidelity(eps, NoiseDistribution::Gaussian, 50);
    EXPECT_GT(loss, previous);
    previous = loss;
  }
}

// Probability lost per gate is about eps^2: 1 - overlap ~ eps^2 * gates within a factor 3.
TEST(Qft, InfidelityScalesWithGateCount) {
  const double gates = static_cast<double>(qft_rotation_count(9));
  for (double eps : {0.01, 0.02, 0.05}) {
    const double ratio = mean_infidelity(eps, NoiseDistribution::Uniform, 50) / (eps * eps * gates);
    EXPECT_GT(ratio, 1.0 / 3.0) << eps;
    EXPECT_LT(ratio, 3.0) << eps;
  }
}

// Gaussian errors of deviation eps*pi carry three times the mean square of
// uniform errors on [-eps*pi, eps*pi].
TEST(Qft, GaussianLossIsThreeTimesUniform) {
  const double eps = 0.01;
  const double ratio = mean_infidelity(eps, NoiseDistribution::Gaussian, 200) /
                       mean_infidelity(eps, NoiseDistribution::Uniform, 200);
  EXPECT_GT(ratio, 2.4);
  EXPECT_LT(ratio, 3.6);
}

TEST(ClassicalFft, DeltaSpectrum) {
  const std::vector<cd> x(4, cd(0.5));
  const auto y = classical_fft_frame(x);
  EXPECT_NEAR(std::abs(y[0] - cd(1.0)), 0.0, 1e-15);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(std::abs(y[i]), 0.0, 1e-15);
}

TEST(ClassicalFft, ParsevalAndRoundTrip) {
  std::mt19937_64 rng(16);
  const auto x = oracle::random_state(512, rng);
  const auto y = classical_fft_frame(x);
  double energy = 0.0;
  for (const auto& a : y) energy += std::norm(a);
  EXPECT_NEAR(energy, 1.0, 1e-12);
  EXPECT_LT(oracle::max_error(classical_ifft_frame(y), x), 1e-12);
}

TEST(ClassicalFft, MatchesNaiveSum) {
  std::mt19937_64 rng(17);
  const auto x = oracle::random_state(64, rng);
  EXPECT_LT(oracle::max_error(classical_fft_frame(x), oracle::naive_dft(x, +1)), 1e-12);
  EXPECT_LT(oracle::max_error(classical_ifft_frame(x), oracle::naive_dft(x, -1)), 1e-12);
}

TEST(ClassicalFft, RejectsNonPowerOfTwo) {
  const std::vector<cd> x(6, cd(1.0));
  EXPECT_THROW(classical_fft_frame(x), ArgumentError);
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_TRUE(is_power_of_two(1));
}

TEST(ClassicalFft, ManyFramesMatchesNaive) {
  std::mt19937_64 rng(18);
  auto x = oracle::random_state(1024, rng);
  const auto expected = oracle::framewise_dft(x, 128, -1);
  transform_frames(x, 128, Kernel::Negative);
  EXPECT_LT(oracle::max_error(x, expected), 1e-12);
}

}  // namespace
