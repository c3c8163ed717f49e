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

#include "qsonus/audio.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsonus/errors.hpp"
#include "qsonus/fft.hpp"

namespace qsonus {

int qubits_for_length(std::size_t samples) {
  if (samples <= 2) return 1;
  return std::bit_width(samples - 1);
}

StateVector encode(const PcmSignal& signal, int n_qubits) {
  StateVector state(n_qubits);
  if (signal.samples.size() > state.size()) {
    throw ArgumentError("signal of " + std::to_string(signal.samples.size()) +
                        " samples does not fit in " + std::to_string(n_qubits) + " qubits");
  }
  double energy = 0.0;
  for (double s : signal.samples) energy += s * s;
  if (!(energy > 0.0)) throw DegenerateInputError("cannot encode an all-zero signal");
  const double scale = 1.0 / std::sqrt(energy);
  auto amps = state.amplitudes();
  std::fill(amps.begin(), amps.end(), Amplitude{0.0, 0.0});
  for (std::size_t n = 0; n < signal.samples.size(); ++n) amps[n] = signal.samples[n] * scale;
  return state;
}

std::vector<double> rescale_to_peak(std::vector<double> samples, double peak) {
  double max_abs = 0.0;
  for (double s : samples) max_abs = std::max(max_abs, std::abs(s));
  if (max_abs == 0.0) return samples;
  const double g = peak / max_abs;
  for (double& s : samples) s *= g;
  return samples;
}

PcmSignal recover_time_domain(std::span<const double> magnitudes, std::uint32_t rate) {
  std::vector<double> out(magnitudes.begin(), magnitudes.end());
  for (double& v : out) v = std::abs(v);
  return {rescale_to_peak(std::move(out)), rate};
}

std::vector<Amplitude> zero_phase_frames(const SpectrumEstimate& estimate) {
  std::vector<Amplitude> frames(estimate.magnitudes.begin(), estimate.magnitudes.end());
  transform_frames(frames, estimate.plan.frame_size(), Kernel::Positive, false);
  return frames;
}

PcmSignal recover_spectral(const SpectrumEstimate& estimate, std::uint32_t rate) {
  const auto frames = zero_phase_frames(estimate);
  std::vector<double> out(frames.size());
  std::transform(frames.begin(), frames.end(), out.begin(), [](Amplitude a) { return a.real(); });
  return {rescale_to_peak(std::move(out)), rate};
}

double mean_significant_harmonics(std::span<const double> samples, int frame_qubits,
                                  double threshold) {
  const std::size_t frame = std::size_t{1} << frame_qubits;
  const std::size_t frames = (samples.size() + frame - 1) / frame;
  std::vector<Amplitude> data(frames * frame, Amplitude{0.0, 0.0});
  std::copy(samples.begin(), samples.end(), data.begin());
  transform_frames(data, frame, Kernel::Positive);

  double weighted = 0.0;
  double energy_total = 0.0;
  for (std::size_t k = 0; k < frames; ++k) {
    const auto row = std::span<const Amplitude>(data).subspan(k * frame, frame);
    double peak = 0.0;
    double energy = 0.0;
    for (const auto& v : row) {
      peak = std::max(peak, std::abs(v));
      energy += std::norm(v);
    }
    if (peak == 0.0) continue;
    const auto count = std::count_if(row.begin(), row.end(),
                                     [&](Amplitude v) { return std::abs(v) >= threshold * peak; });
    weighted += energy * static_cast<double>(count);
    energy_total += energy;
  }
  return energy_total == 0.0 ? 0.0 : weighted / energy_total;
}

}  // namespace qsonus
