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

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qsonus/random.hpp"

namespace qsonus {

enum class NoiseDistribution {
  /// Normal with standard deviation epsilon*pi.
  Gaussian,
  /// Uniform on [-epsilon*pi, +epsilon*pi].
  Uniform,
};

/// Gate-angle fluctuation model: each noisy gate draws a fresh angle error
/// of amplitude epsilon*pi.
struct NoiseModel {
  double epsilon = 0.0;
  NoiseDistribution distribution = NoiseDistribution::Gaussian;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  static NoiseModel noiseless() { return {}; }

  /// Generator feeding gate-angle perturbations.
  CounterRng gate_stream() const { return {seed, stream_id, 0}; }
  /// Generator feeding measurement shots; independent of gate_stream().
  CounterRng sampling_stream() const { return {seed, stream_id, 1}; }
};

struct GateTally {
  std::uint64_t hadamards = 0;
  std::uint64_t controlled_phases = 0;
  std::uint64_t swaps = 0;
  std::uint64_t diagonal_pair_phases = 0;

  /// Hadamards plus controlled phases: the rotations of a QFT circuit.
  std::uint64_t rotations() const { return hadamards + controlled_phases; }

  friend bool operator==(const GateTally&, const GateTally&) = default;
};

/// Noise source and gate counter threaded through a circuit run.
class GateContext {
 public:
  GateContext() : GateContext(NoiseModel::noiseless()) {}
  explicit GateContext(const NoiseModel& noise);

  /// Every gate receives exactly `delta` as its angle error. Test hook for
  /// reproducing a noisy gate by hand.
  static GateContext with_fixed_error(double delta);

  double epsilon() const { return epsilon_; }

  /// Next angle error. Exactly 0 when epsilon is 0.
  double angle_error();

  const GateTally& tally() const { return tally_; }
  GateTally& tally() { return tally_; }

 private:
  double epsilon_;
  NoiseDistribution distribution_;
  CounterRng rng_;
  std::normal_distribution<double> normal_;
  std::optional<double> fixed_error_;
  GateTally tally_;
};

}  // namespace qsonus
