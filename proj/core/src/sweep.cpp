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

#include "qsonus/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qsonus/csv.hpp"
#include "qsonus/errors.hpp"
#include "qsonus/gates.hpp"
#include "qsonus/parallel.hpp"
#include "qsonus/random.hpp"

namespace qsonus {

std::string_view to_string(Pipeline p) {
  return p == Pipeline::TimeDomain ? "time" : "spectral";
}

namespace {

std::vector<double> real_parts(const std::vector<Amplitude>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](Amplitude a) { return a.real(); });
  return out;
}

}  // namespace

ReconstructionPipeline::ReconstructionPipeline(const PcmSignal& signal, int n_qubits,
                                               int frame_qubits, FidelityReference reference)
    : plan_(n_qubits, frame_qubits),
      rate_(signal.rate),
      encoded_(encode(signal, n_qubits)),
      transformed_(encoded_) {
  GateContext exact;
  qft_low_qubits(transformed_, plan_, exact);

  if (reference == FidelityReference::Original) {
    time_reference_.resize(encoded_.size());
    for (std::size_t i = 0; i < encoded_.size(); ++i) time_reference_[i] = encoded_[i].real();
    spectral_reference_ = time_reference_;
    return;
  }
  time_reference_ = exact_spectrum(encoded_, plan_).magnitudes;
  spectral_reference_ = real_parts(zero_phase_frames(exact_spectrum(transformed_, plan_)));
}

std::vector<double> ReconstructionPipeline::run(Pipeline pipeline, const Readout& readout,
                                                const NoiseModel& noise) const {
  auto rng = noise.sampling_stream();
  if (pipeline == Pipeline::TimeDomain) {
    return read_spectrum(encoded_, plan_, readout, rng).magnitudes;
  }
  if (noise.epsilon == 0.0) {
    return real_parts(zero_phase_frames(read_spectrum(transformed_, plan_, readout, rng)));
  }
  StateVector state = encoded_;
  GateContext ctx(noise);
  qft_low_qubits(state, plan_, ctx);
  auto estimate = read_spectrum(state, plan_, readout, rng);
  return real_parts(zero_phase_frames(estimate));
}

const std::vector<double>& ReconstructionPipeline::reference(Pipeline pipeline) const {
  return pipeline == Pipeline::TimeDomain ? time_reference_ : spectral_reference_;
}

double ReconstructionPipeline::score(Pipeline pipeline,
                                     const std::vector<double>& reconstruction) const {
  return fidelity(reference(pipeline), reconstruction);
}

NoiseModel sweep_noise(const SweepConfig& config, std::size_t shots_index, int realization,
                       Pipeline pipeline, double epsilon) {
  const std::uint64_t point = (static_cast<std::uint64_t>(realization) << 32) ^
                              (static_cast<std::uint64_t>(shots_index) << 1) ^
                              static_cast<std::uint64_t>(pipeline == Pipeline::Spectral);
  return NoiseModel{epsilon, config.noise_distribution, config.seed, mix64(point)};
}

std::vector<FidelityReport> sweep_measurements(const PcmSignal& signal, const SweepConfig& config) {
  if (config.shots_per_frame.empty() || config.epsilons.empty() || config.pipelines.empty()) {
    throw ArgumentError("sweep needs nonempty M, epsilon and pipeline lists");
  }
  if (config.realizations < 1) throw ArgumentError("sweep needs at least one realization");
  for (auto m : config.shots_per_frame) {
    if (m == 0) throw ArgumentError("shots per frame must be positive");
  }
  for (double e : config.epsilons) {
    if (!(e >= 0.0)) throw ArgumentError("noise amplitudes must be >= 0");
  }

  const ReconstructionPipeline pipeline(signal, config.n_qubits, config.frame_qubits,
                                        config.reference);
  std::vector<FidelityReport> reports;
  for (Pipeline p : config.pipelines) {
    for (auto m : config.shots_per_frame) {
      for (double e : config.epsilons) {
        for (int r = 0; r < config.realizations; ++r) reports.push_back({p, m, e, r, 0.0});
      }
    }
  }

  parallel_for(reports.size(), [&](std::size_t i) {
    auto& rep = reports[i];
    const auto m_index = static_cast<std::size_t>(
        std::find(config.shots_per_frame.begin(), config.shots_per_frame.end(),
                  rep.shots_per_frame) -
        config.shots_per_frame.begin());
    const auto noise = sweep_noise(config, m_index, rep.realization, rep.pipeline, rep.epsilon);
    const Readout readout{rep.shots_per_frame, config.mode};
    rep.fidelity = pipeline.score(rep.pipeline, pipeline.run(rep.pipeline, readout, noise));
  });
  return reports;
}

std::vector<SweepSummary> summarize(const std::vector<FidelityReport>& reports) {
  std::vector<SweepSummary> out;
  std::vector<std::vector<double>> values;
  for (const auto& r : reports) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SweepSummary& s) {
      return s.pipeline == r.pipeline && s.shots_per_frame == r.shots_per_frame &&
             s.epsilon == r.epsilon;
    });
    if (it == out.end()) {
      out.push_back({r.pipeline, r.shots_per_frame, r.epsilon, 0.0, 0.0, 0});
      values.emplace_back();
      it = out.end() - 1;
    }
    values[static_cast<std::size_t>(it - out.begin())].push_back(r.fidelity);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& v = values[i];
    const double n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    out[i].mean = mean;
    out[i].standard_error = v.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
    out[i].realizations = static_cast<int>(v.size());
  }
  return out;
}

std::optional<SweepSummary> find_summary(const std::vector<SweepSummary>& summaries,
                                         Pipeline pipeline, std::uint64_t shots_per_frame,
                                         double epsilon) {
  for (const auto& s : summaries) {
    if (s.pipeline == pipeline && s.shots_per_frame == shots_per_frame && s.epsilon == epsilon) {
      return s;
    }
  }
  return std::nullopt;
}

QuadraticFit fit_sweep(const std::vector<SweepSummary>& summaries, std::uint64_t shots_per_frame,
                       int frame_qubits) {
  std::vector<NoisePoint> points;
  double baseline = 0.0;
  for (const auto& s : summaries) {
    if (s.pipeline != Pipeline::Spectral || s.shots_per_frame != shots_per_frame) continue;
    if (s.epsilon == 0.0) {
      baseline = 1.0 - s.mean;
    } else {
      points.push_back({s.epsilon, s.mean});
    }
  }
  return fit_quadratic(points, frame_qubits, baseline);
}

void write_sweep_csv(std::ostream& out, const std::vector<FidelityReport>& reports) {
  out << "pipeline,M,epsilon,realization,fidelity\n";
  for (const auto& r : reports) {
    out << to_string(r.pipeline) << ',' << r.shots_per_frame << ',' << format_double(r.epsilon)
        << ',' << r.realization << ',' << format_double(r.fidelity) << '\n';
  }
}

}  // namespace qsonus
