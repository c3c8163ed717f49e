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
#include <filesystem>
#include <span>
#include <vector>

#include "qsonus/spectrum.hpp"
#include "qsonus/state_vector.hpp"

namespace qsonus {

/// Mono real-valued audio, samples inside (-1, 1).
struct PcmSignal {
  std::vector<double> samples;
  std::uint32_t rate = 8000;
};

inline constexpr std::uint32_t kAudioRate = 8000;
inline constexpr std::uint32_t kSawtoothRate = 1000;
inline constexpr int kAudioFrameQubits = 9;
inline constexpr int kSawtoothFrameQubits = 5;
inline constexpr double kPlaybackPeak = 0.9;

/// Reads RIFF/WAVE mono 16-bit PCM. Throws FormatError naming the chunk or
/// field that is not supported.
PcmSignal load_wav(const std::filesystem::path& path);

/// Writes RIFF/WAVE mono 16-bit PCM; samples are clipped to +-32767/32768.
void save_wav(const PcmSignal& signal, const std::filesystem::path& path);

/// Amplitude encoding A * sum_n s_n |n>, zero padded at the tail.
/// Throws ArgumentError if the signal does not fit in 2^{n_qubits} samples
/// and DegenerateInputError for an all-zero signal.
StateVector encode(const PcmSignal& signal, int n_qubits);

/// Smallest qubit count that holds the whole signal.
int qubits_for_length(std::size_t samples);

/// Scales to the playback peak (silence stays silence).
std::vector<double> rescale_to_peak(std::vector<double> samples, double peak = kPlaybackPeak);

/// Time-domain readout s~_n = |s_n| from estimated magnitudes.
PcmSignal recover_time_domain(std::span<const double> magnitudes, std::uint32_t rate);

/// Zero-phase reconstruction Re(s'_n), s'_n = sum_j |S_{k,j}| e^{2 pi i j m / frame_size}
/// with n = k * frame_size + m.
PcmSignal recover_spectral(const SpectrumEstimate& estimate, std::uint32_t rate);

/// Same reconstruction without the playback rescale or the real part:
/// the complex s'_n as written.
std::vector<Amplitude> zero_phase_frames(const SpectrumEstimate& estimate);

struct SpeechSynthOptions {
  /// Partials per voiced segment before formant shaping.
  int harmonics = 20;
  int frame_qubits = kAudioFrameQubits;
  /// Partial h is scaled by h^{-tilt}.
  double spectral_tilt = 1.0;
  /// Multiplies the three Gaussian formant widths (70, 90, 120 Hz).
  double bandwidth_scale = 1.0;
};

/// Deterministic speech-like test signal: syllables of drifting harmonic
/// series with formant-shaped amplitudes, separated by pauses. Tuned so
/// about 20 harmonic bins per 512-sample frame exceed 10% of the frame peak.
PcmSignal synth_speech_like(double duration_s, std::uint32_t rate, std::uint64_t seed,
                            const SpeechSynthOptions& options = {});

/// Relative threshold defining a significant harmonic.
inline constexpr double kSignificantHarmonicThreshold = 0.1;

/// Counts bins with |S_{k,j}| >= threshold * max_j |S_{k,j}| in each frame
/// of the unitary framewise DFT of `samples` (zero padded to whole frames).
/// Returns the energy-weighted mean over frames, so that faint onset frames
/// (broadband because the frame edge cuts them) count in proportion to the
/// sound they carry.
double mean_significant_harmonics(std::span<const double> samples, int frame_qubits,
                                  double threshold = kSignificantHarmonicThreshold);

}  // namespace qsonus
