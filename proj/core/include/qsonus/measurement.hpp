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
#include <span>
#include <string_view>
#include <vector>

#include "qsonus/qft.hpp"
#include "qsonus/random.hpp"
#include "qsonus/spectrum.hpp"
#include "qsonus/state_vector.hpp"

namespace qsonus {

/// Outcome counts of a full-register measurement, indexed by basis state.
struct CountTable {
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t operator[](std::size_t index) const { return counts[index]; }
};

/// Norm deviation tolerated before sampling refuses a state.
inline constexpr double kSamplingNormTolerance = 1e-6;

/// Draws `shots` independent projective measurements in the computational
/// basis. Throws StateError for an unnormalized state, ArgumentError for
/// zero shots.
CountTable sample_basis(const StateVector& state, std::uint64_t shots, CounterRng& rng);

enum class MeasurementMode {
  /// M * K full-register shots; the frame outcome is random too.
  TotalMultinomial,
  /// Exactly M shots per frame from the conditional in-frame distribution,
  /// rescaled by the exact frame weight.
  PerFrameExact,
};

std::optional<MeasurementMode> parse_measurement_mode(std::string_view name);
std::string_view to_string(MeasurementMode mode);

struct MeasurementPlan {
  MeasurementMode mode = MeasurementMode::TotalMultinomial;
  std::uint64_t shots_per_frame = 1;
  FramePlan frames;

  std::uint64_t total_shots() const { return shots_per_frame * frames.frame_count(); }
};

/// Estimates |S_{k,j}| from simulated measurements; phases are discarded.
SpectrumEstimate estimate_spectrum(const StateVector& state, const MeasurementPlan& plan,
                                   CounterRng& rng);

/// |S_{k,j}| read directly off the amplitudes (infinite statistics).
SpectrumEstimate exact_spectrum(const StateVector& state, const FramePlan& plan);

/// How a spectrum is read out of a register.
struct Readout {
  /// Empty: exact amplitudes (infinite statistics).
  std::optional<std::uint64_t> shots_per_frame;
  MeasurementMode mode = MeasurementMode::TotalMultinomial;
};

/// exact_spectrum or estimate_spectrum, as selected by `readout`.
SpectrumEstimate read_spectrum(const StateVector& state, const FramePlan& plan,
                               const Readout& readout, CounterRng& rng);

/// Amplitude grid over the outcomes of a qubit subset. Rows are indexed by
/// the digits of row_qubits (first listed is most significant), columns
/// likewise by col_qubits.
struct CoarseGrid {
  std::vector<int> row_qubits;
  std::vector<int> col_qubits;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Exact marginal: cell value is sqrt of the total probability of the basis
/// states whose measured digits select that cell. Throws ArgumentError when
/// the qubit lists overlap or are empty.
CoarseGrid coarse_diagram(const StateVector& state, std::span<const int> row_qubits,
                          std::span<const int> col_qubits);

/// Finite-statistics version: probabilities replaced by empirical
/// frequencies of `shots` full-register measurements.
CoarseGrid coarse_diagram(const StateVector& state, std::span<const int> row_qubits,
                          std::span<const int> col_qubits, std::uint64_t shots, CounterRng& rng);

/// Coarse diagram from an arbitrary nonnegative weight per basis index
/// (probabilities or counts); values are sqrt(weight / total weight).
CoarseGrid coarse_diagram_from_weights(std::span<const double> weights, int n_qubits,
                                       std::span<const int> row_qubits,
                                       std::span<const int> col_qubits);

}  // namespace qsonus
