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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qsonus/audio.hpp"
#include "qsonus/errors.hpp"
#include "qsonus/random.hpp"

namespace qsonus {

namespace {

struct Formant {
  double centre_hz;
  double bandwidth_hz;
  double gain;
};

// Voiced syllable: harmonic series on a gliding fundamental, shaped by three
// resonances that also glide between their start and end positions.
void add_syllable(std::vector<double>& out, std::size_t start, std::size_t length, double rate,
                  const SpeechSynthOptions& options, CounterRng& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double f0_start = rng.uniform(95.0, 210.0);
  const double f0_end = f0_start * rng.uniform(0.8, 1.25);

  std::array<Formant, 3> from{Formant{rng.uniform(300, 800), 70 * options.bandwidth_scale, 1.0},
                              Formant{rng.uniform(900, 2200), 90 * options.bandwidth_scale, rng.uniform(0.4, 0.8)},
                              Formant{rng.uniform(2300, 3200), 120 * options.bandwidth_scale,
                                      rng.uniform(0.15, 0.4)}};
  std::array<Formant, 3> to = from;
  for (auto& f : to) f.centre_hz *= rng.uniform(0.85, 1.15);

  const int harmonics = options.harmonics;
  std::vector<double> phase(static_cast<std::size_t>(harmonics));
  for (auto& p : phase) p = rng.uniform(0.0, two_pi);

  const double nyquist_guard = 0.45 * rate;
  for (std::size_t i = 0; i < length && start + i < out.size(); ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(length);
    const double f0 = f0_start + (f0_end - f0_start) * u;
    // raised-sine attack and release
    const double envelope = std::pow(std::sin(std::numbers::pi * u), 2.0);
    double value = 0.0;
    for (int h = 1; h <= harmonics; ++h) {
      const double f = h * f0;
      auto& ph = phase[static_cast<std::size_t>(h - 1)];
      ph += two_pi * f / rate;
      if (f >= nyquist_guard) continue;
      double amplitude = 0.0;
      for (std::size_t k = 0; k < from.size(); ++k) {
        const double centre = from[k].centre_hz + (to[k].centre_hz - from[k].centre_hz) * u;
        const double x = (f - centre) / from[k].bandwidth_hz;
        amplitude += from[k].gain * std::exp(-0.5 * x * x);
      }
      value += amplitude * std::sin(ph) * std::pow(static_cast<double>(h), -options.spectral_tilt);
    }
    out[start + i] += envelope * value;
  }
}

}  // namespace

PcmSignal synth_speech_like(double duration_s, std::uint32_t rate, std::uint64_t seed,
                            const SpeechSynthOptions& options) {
  const auto total = static_cast<std::size_t>(std::llround(duration_s * rate));
  if (rate == 0 || total < (std::size_t{1} << options.frame_qubits)) {
    throw ArgumentError("synthetic signal must span at least one frame");
  }
  CounterRng rng(seed, 0x5e7c4);
  std::vector<double> out(total, 0.0);

  std::size_t t = static_cast<std::size_t>(rng.uniform(0.02, 0.08) * rate);
  while (t < total) {
    const auto length = static_cast<std::size_t>(rng.uniform(0.18, 0.45) * rate);
    add_syllable(out, t, length, rate, options, rng);
    t += length + static_cast<std::size_t>(rng.uniform(0.04, 0.25) * rate);
  }

  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) {
    // a single syllable always fits when total >= one frame; guard anyway
    add_syllable(out, 0, total, rate, options, rng);
    for (double v : out) peak = std::max(peak, std::abs(v));
  }
  for (double& v : out) v *= 0.8 / peak;
  return {std::move(out), rate};
}

}  // namespace qsonus
