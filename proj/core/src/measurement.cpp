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

#include "qsonus/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qsonus/errors.hpp"

namespace qsonus {

namespace {

// Cumulative distribution over a contiguous block of amplitudes.
std::vector<double> cumulative_probabilities(std::span<const Amplitude> amps) {
  std::vector<double> cdf(amps.size());
  double running = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    running += std::norm(amps[i]);
    cdf[i] = running;
  }
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, CounterRng& rng) {
  const double u = rng.uniform() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  // u < cdf.back() always, so `it` is valid; the clamp covers rounding.
  return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}

void check_normalized(const StateVector& state) {
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > kSamplingNormTolerance) {
    throw StateError("cannot sample an unnormalized state (norm^2 = " + std::to_string(norm) +
                     ")");
  }
}

}  // namespace

CountTable sample_basis(const StateVector& state, std::uint64_t shots, CounterRng& rng) {
  if (shots == 0) throw ArgumentError("shot count must be >= 1");
  check_normalized(state);
  const auto cdf = cumulative_probabilities(state.amplitudes());
  CountTable table{std::vector<std::uint64_t>(state.size(), 0), shots};
  for (std::uint64_t s = 0; s < shots; ++s) ++table.counts[draw(cdf, rng)];
  return table;
}

std::optional<MeasurementMode> parse_measurement_mode(std::string_view name) {
  if (name == "total") return MeasurementMode::TotalMultinomial;
  if (name == "per-frame") return MeasurementMode::PerFrameExact;
  return std::nullopt;
}

std::string_view to_string(MeasurementMode mode) {
  return mode == MeasurementMode::TotalMultinomial ? "total" : "per-frame";
}

SpectrumEstimate estimate_spectrum(const StateVector& state, const MeasurementPlan& plan,
                                   CounterRng& rng) {
  if (plan.total_shots() == 0) throw ArgumentError("measurement plan has zero shots");
  if (state.n_qubits() != plan.frames.n_qubits()) {
    throw ArgumentError("measurement plan does not match the register size");
  }
  SpectrumEstimate est(plan.frames);
  est.provenance = Provenance::Sampled;
  est.shots = plan.shots_per_frame;

  if (plan.mode == MeasurementMode::TotalMultinomial) {
    const auto table = sample_basis(state, plan.total_shots(), rng);
    const double total = static_cast<double>(table.shots);
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
      est.magnitudes[i] = std::sqrt(static_cast<double>(table.counts[i]) / total);
    }
    return est;
  }

  check_normalized(state);
  const std::size_t frame = plan.frames.frame_size();
  const double shots = static_cast<double>(plan.shots_per_frame);
  std::vector<std::uint64_t> counts(frame);
  for (std::size_t k = 0; k < plan.frames.frame_count(); ++k) {
    const auto block = state.amplitudes().subspan(k * frame, frame);
    const auto cdf = cumulative_probabilities(block);
    const double weight = cdf.back();
    if (weight <= 0.0) continue;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t s = 0; s < plan.shots_per_frame; ++s) ++counts[draw(cdf, rng)];
    for (std::size_t j = 0; j < frame; ++j) {
      est.at(k, j) = std::sqrt(weight) * std::sqrt(static_cast<double>(counts[j]) / shots);
    }
  }
  return est;
}

SpectrumEstimate exact_spectrum(const StateVector& state, const FramePlan& plan) {
  if (state.n_qubits() != plan.n_qubits()) {
    throw ArgumentError("frame plan does not match the register size");
  }
  SpectrumEstimate est(plan);
  for (std::size_t i = 0; i < state.size(); ++i) est.magnitudes[i] = std::abs(state[i]);
  return est;
}

SpectrumEstimate read_spectrum(const StateVector& state, const FramePlan& plan,
                               const Readout& readout, CounterRng& rng) {
  if (!readout.shots_per_frame) return exact_spectrum(state, plan);
  return estimate_spectrum(state, MeasurementPlan{readout.mode, *readout.shots_per_frame, plan},
                           rng);
}

namespace {

void check_subsets(int n_qubits, std::span<const int> rows, std::span<const int> cols) {
  if (rows.empty() || cols.empty()) throw ArgumentError("coarse diagram needs row and column qubits");
  std::set<int> seen;
  for (auto list : {rows, cols}) {
    for (int q : list) {
      if (q < 1 || q > n_qubits) {
        throw IndexError("qubit " + std::to_string(q) + " out of range [1, " +
                         std::to_string(n_qubits) + "]");
      }
      if (!seen.insert(q).second) {
        throw ArgumentError("qubit " + std::to_string(q) + " listed twice in coarse diagram");
      }
    }
  }
}

std::size_t digits_of(std::size_t index, std::span<const int> qubits, int n_qubits) {
  std::size_t out = 0;
  for (int q : qubits) out = (out << 1) | ((index >> (n_qubits - q)) & 1U);
  return out;
}

}  // namespace

CoarseGrid coarse_diagram_from_weights(std::span<const double> weights, int n_qubits,
                                       std::span<const int> row_qubits,
                                       std::span<const int> col_qubits) {
  check_subsets(n_qubits, row_qubits, col_qubits);
  if (weights.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("weight count does not match the register size");
  }
  CoarseGrid grid;
  grid.row_qubits.assign(row_qubits.begin(), row_qubits.end());
  grid.col_qubits.assign(col_qubits.begin(), col_qubits.end());
  grid.rows = std::size_t{1} << row_qubits.size();
  grid.cols = std::size_t{1} << col_qubits.size();
  grid.values.assign(grid.rows * grid.cols, 0.0);

  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    grid.at(digits_of(i, row_qubits, n_qubits), digits_of(i, col_qubits, n_qubits)) += weights[i];
    total += weights[i];
  }
  if (!(total > 0.0)) throw DegenerateInputError("coarse diagram of zero total weight");
  for (double& v : grid.values) v = std::sqrt(v / total);
  return grid;
}

CoarseGrid coarse_diagram(const StateVector& state, std::span<const int> row_qubits,
                          std::span<const int> col_qubits) {
  std::vector<double> weights(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) weights[i] = std::norm(state[i]);
  return coarse_diagram_from_weights(weights, state.n_qubits(), row_qubits, col_qubits);
}

CoarseGrid coarse_diagram(const StateVector& state, std::span<const int> row_qubits,
                          std::span<const int> col_qubits, std::uint64_t shots, CounterRng& rng) {
  check_subsets(state.n_qubits(), row_qubits, col_qubits);
  const auto table = sample_basis(state, shots, rng);
  std::vector<double> weights(table.counts.begin(), table.counts.end());
  return coarse_diagram_from_weights(weights, state.n_qubits(), row_qubits, col_qubits);
}

}  // namespace qsonus
