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
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "qsonus/audio.hpp"
#include "qsonus/measurement.hpp"
#include "qsonus/metrics.hpp"
#include "qsonus/noise.hpp"
#include "qsonus/qft.hpp"

namespace qsonus {

enum class Pipeline {
  /// Measure the encoded register directly, recover |s_n|.
  TimeDomain,
  /// Framewise QFT, measure, zero-phase reconstruction.
  Spectral,
};

std::string_view to_string(Pipeline p);

enum class FidelityReference {
  /// Infinite-statistics, noiseless output of the same pipeline.
  IdealReconstruction,
  /// The encoded input signal itself.
  Original,
};

/// Encoded signal plus the cached ideal transforms and references both
/// pipelines are scored against.
class ReconstructionPipeline {
 public:
  ReconstructionPipeline(const PcmSignal& signal, int n_qubits, int frame_qubits,
                         FidelityReference reference = FidelityReference::IdealReconstruction);

  const FramePlan& plan() const { return plan_; }
  std::uint32_t rate() const { return rate_; }
  const StateVector& encoded() const { return encoded_; }
  /// Noiseless framewise QFT of the encoded state.
  const StateVector& transformed() const { return transformed_; }

  /// Unscaled reconstruction (|s~_n| or Re s'_n) of one measurement run.
  /// Time-domain runs ignore noise.epsilon: no gates act before readout.
  std::vector<double> run(Pipeline pipeline, const Readout& readout,
                          const NoiseModel& noise) const;

  const std::vector<double>& reference(Pipeline pipeline) const;

  double score(Pipeline pipeline, const std::vector<double>& reconstruction) const;

 private:
  FramePlan plan_;
  std::uint32_t rate_;
  StateVector encoded_;
  StateVector transformed_;
  std::vector<double> time_reference_;
  std::vector<double> spectral_reference_;
};

struct SweepConfig {
  int n_qubits = 16;
  int frame_qubits = kAudioFrameQubits;
  std::vector<std::uint64_t> shots_per_frame;
  std::vector<double> epsilons;
  int realizations = 10;
  MeasurementMode mode = MeasurementMode::TotalMultinomial;
  std::uint64_t seed = 1;
  NoiseDistribution noise_distribution = NoiseDistribution::Gaussian;
  FidelityReference reference = FidelityReference::IdealReconstruction;
  std::vector<Pipeline> pipelines{Pipeline::TimeDomain, Pipeline::Spectral};
};

struct FidelityReport {
  Pipeline pipeline;
  std::uint64_t shots_per_frame;
  double epsilon;
  int realization;
  double fidelity;
};

/// Noise/sampling streams for one sweep point. The stream depends on the
/// realization, shot count and pipeline but not on epsilon, so neighbouring
/// epsilons share their random draws.
NoiseModel sweep_noise(const SweepConfig& config, std::size_t shots_index, int realization,
                       Pipeline pipeline, double epsilon);

/// Every (pipeline, M, epsilon, realization) point, ordered pipeline-major
/// then M, epsilon, realization. Throws ArgumentError for empty lists or
/// non-positive realizations.
std::vector<FidelityReport> sweep_measurements(const PcmSignal& signal, const SweepConfig& config);

struct SweepSummary {
  Pipeline pipeline;
  std::uint64_t shots_per_frame;
  double epsilon;
  double mean;
  double standard_error;
  int realizations;
};

std::vector<SweepSummary> summarize(const std::vector<FidelityReport>& reports);

std::optional<SweepSummary> find_summary(const std::vector<SweepSummary>& summaries,
                                         Pipeline pipeline, std::uint64_t shots_per_frame,
                                         double epsilon);

/// Quadratic-law fit of the spectral rows at one shot count, using the
/// epsilon = 0 mean (when present) as the sampling baseline.
QuadraticFit fit_sweep(const std::vector<SweepSummary>& summaries, std::uint64_t shots_per_frame,
                       int frame_qubits);

void write_sweep_csv(std::ostream& out, const std::vector<FidelityReport>& reports);

}  // namespace qsonus
