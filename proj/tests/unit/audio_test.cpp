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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qsonus/audio.hpp"
#include "qsonus/errors.hpp"
#include "qsonus/measurement.hpp"
#include "qsonus/qft.hpp"

namespace {

using namespace qsonus;
using oracle::cd;
namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const auto dir = fs::temp_directory_path() / "qsonus_tests";
  fs::create_directories(dir);
  return dir / (std::string(info->name()) + "_" + name);
}

PcmSignal sine(double freq, std::uint32_t rate, std::size_t n, double amp = 0.5) {
  PcmSignal s{{}, rate};
  for (std::size_t i = 0; i < n; ++i)
    s.samples.push_back(amp * std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(i) / rate));
  return s;
}

std::vector<unsigned char> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_bytes(const fs::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

TEST(Wav, SineRoundTrip) {
  const auto s = sine(1000.0, 8000, 8000, 0.8);
  const auto path = scratch("sine.wav");
  save_wav(s, path);
  const auto back = load_wav(path);
  ASSERT_EQ(back.samples.size(), s.samples.size());
  EXPECT_EQ(back.rate, 8000u);
  for (std::size_t i = 0; i < s.samples.size(); ++i)
    EXPECT_LE(std::abs(back.samples[i] - s.samples[i]), std::ldexp(1.0, -15));
}

TEST(Wav, ZeroRoundTripsExactly) {
  const PcmSignal s{std::vector<double>(100, 0.0), 1000};
  const auto path = scratch("zero.wav");
  save_wav(s, path);
  const auto back = load_wav(path);
  EXPECT_EQ(back.samples, s.samples);
  EXPECT_EQ(back.rate, 1000u);
}

TEST(Wav, HeaderFields) {
  const auto path = scratch("hdr.wav");
  save_wav(sine(440.0, 8000, 16), path);
  const auto b = read_bytes(path);
  ASSERT_EQ(b.size(), 44u + 32u);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "RIFF");
  EXPECT_EQ(std::string(b.begin() + 8, b.begin() + 12), "WAVE");
  const std::uint32_t rate = b[24] | (b[25] << 8) | (b[26] << 16) | (static_cast<std::uint32_t>(b[27]) << 24);
  EXPECT_EQ(rate, 8000u);
}

TEST(Wav, ClipsAtFullScale) {
  const auto path = scratch("clip.wav");
  save_wav(PcmSignal{{1.5, -1.5, 0.25}, 8000}, path);
  const auto back = load_wav(path);
  EXPECT_DOUBLE_EQ(back.samples[0], 32767.0 / 32768.0);
  EXPECT_DOUBLE_EQ(back.samples[1], -32767.0 / 32768.0);
  EXPECT_DOUBLE_EQ(back.samples[2], 0.25);
}

TEST(Wav, RejectsUnsupportedFiles) {
  const auto good = scratch("good.wav");
  save_wav(sine(440.0, 8000, 16), good);
  auto bytes = read_bytes(good);

  auto not_riff = bytes;
  not_riff[0] = 'X';
  write_bytes(scratch("a.wav"), not_riff);
  EXPECT_THROW(load_wav(scratch("a.wav")), FormatError);

  auto stereo = bytes;
  stereo[22] = 2;
  write_bytes(scratch("b.wav"), stereo);
  try {
    load_wav(scratch("b.wav"));
    FAIL() << "stereo accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("fmt"), std::string::npos) << e.what();
  }

  auto truncated = std::vector<unsigned char>(bytes.begin(), bytes.begin() + 36);
  write_bytes(scratch("c.wav"), truncated);
  try {
    load_wav(scratch("c.wav"));
    FAIL() << "missing data chunk accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("data"), std::string::npos) << e.what();
  }

  EXPECT_THROW(load_wav(scratch("missing.wav")), FormatError);
}

TEST(Encode, Normalizes) {
  const auto s = encode(PcmSignal{{0.5, -0.5}, 8000}, 1);
  EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Encode, ZeroPadsAtTail) {
  const auto s = encode(PcmSignal{{0.1, 0.2, 0.3}, 8000}, 3);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  for (std::size_t i = 3; i < 8; ++i) EXPECT_EQ(s[i], cd(0.0));
  EXPECT_EQ(qubits_for_length(208000), 18);
  EXPECT_EQ(qubits_for_length(262144), 18);
  EXPECT_EQ(qubits_for_length(262145), 19);
}

TEST(Encode, Errors) {
  EXPECT_THROW(encode(PcmSignal{std::vector<double>(5, 0.1), 8000}, 2), ArgumentError);
  EXPECT_THROW(encode(PcmSignal{std::vector<double>(4, 0.0), 8000}, 2), DegenerateInputError);
}

TEST(Encode, ScaleInvariantAndInvertible) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.9, 0.9), c(0.01, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    PcmSignal s{std::vector<double>(37), 8000};
    for (auto& v : s.samples) v = u(rng);
    PcmSignal scaled = s;
    const double k = c(rng);
    for (auto& v : scaled.samples) v *= k;
    const auto a = encode(s, 6);
    const auto b = encode(scaled, 6);
    EXPECT_LT(max_abs_difference(a.amplitudes(), b.amplitudes()), 1e-12);

    // decode with the known normalization recovers the samples
    double energy = 0.0;
    for (double v : s.samples) energy += v * v;
    for (std::size_t i = 0; i < s.samples.size(); ++i)
      EXPECT_NEAR(a[i].real() * std::sqrt(energy), s.samples[i], 1e-12);
  }
}

TEST(RecoverTimeDomain, RectifiesSine) {
  const auto s = sine(8.0, 256, 256);
  std::vector<double> mags;
  for (double v : s.samples) mags.push_back(std::abs(v));
  const auto out = recover_time_domain(mags, 256);
  for (std::size_t i = 0; i < s.samples.size(); ++i)
    EXPECT_NEAR(out.samples[i], 0.9 * std::abs(std::sin(2.0 * std::numbers::pi * 8.0 * i / 256.0)), 1e-12);
}

TEST(RecoverTimeDomain, ConstantUnchangedUpToScale) {
  const std::vector<double> mags(10, 0.3);
  const auto out = recover_time_domain(mags, 8000);
  for (double v : out.samples) EXPECT_NEAR(v, 0.9, 1e-15);
}

TEST(RecoverTimeDomain, RectifiedSineHasDoubledLine) {
  const auto s = sine(8.0, 256, 256);
  std::vector<double> mags;
  for (double v : s.samples) mags.push_back(std::abs(v));
  const auto out = recover_time_domain(mags, 256);
  const auto spectrum = oracle::naive_dft(std::vector<cd>(out.samples.begin(), out.samples.end()), -1);
  EXPECT_GT(std::abs(spectrum[16]), 0.1 * std::abs(spectrum[0]));
  EXPECT_LT(std::abs(spectrum[8]), 1e-10);
}

SpectrumEstimate single_frame(std::vector<double> mags) {
  SpectrumEstimate e{FramePlan(qubits_for_length(mags.size()), qubits_for_length(mags.size()))};
  e.magnitudes = std::move(mags);
  return e;
}

TEST(RecoverSpectral, SingleHarmonicIsCosine) {
  std::vector<double> mags(16, 0.0);
  mags[3] = 1.0;
  const auto out = recover_spectral(single_frame(mags), 1000);
  for (std::size_t m = 0; m < 16; ++m)
    EXPECT_NEAR(out.samples[m], 0.9 * std::cos(2.0 * std::numbers::pi * 3.0 * m / 16.0), 1e-12);
}

TEST(RecoverSpectral, SilenceStaysSilent) {
  const auto out = recover_spectral(single_frame(std::vector<double>(32, 0.0)), 1000);
  for (double v : out.samples) EXPECT_EQ(v, 0.0);
}

TEST(RecoverSpectral, ZeroPhaseFramesReproduced) {
  // Frames built from nonnegative symmetric spectra are already zero-phase.
  const FramePlan plan(8, 5);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cd> frames;
  for (std::size_t k = 0; k < plan.frame_count(); ++k) {
    std::vector<cd> spec(32);
    for (std::size_t j = 0; j <= 16; ++j) spec[j] = spec[(32 - j) % 32] = u(rng);
    const auto x = oracle::naive_dft(spec, +1);
    frames.insert(frames.end(), x.begin(), x.end());
  }
  PcmSignal s{{}, 8000};
  for (const auto& v : frames) s.samples.push_back(v.real());
  const auto state = encode(s, 8);
  auto transformed = state;
  GateContext ctx;
  qft_low_qubits(transformed, plan, ctx);
  const auto out = recover_spectral(exact_spectrum(transformed, plan), 8000);

  double peak = 0.0;
  for (double v : s.samples) peak = std::max(peak, std::abs(v));
  for (std::size_t n = 0; n < s.samples.size(); ++n)
    EXPECT_NEAR(out.samples[n], 0.9 * s.samples[n] / peak, 1e-10);
}

std::vector<double> frame_magnitudes(const std::vector<double>& x, std::size_t frame) {
  const auto spec = oracle::framewise_dft(std::vector<cd>(x.begin(), x.end()), frame, +1);
  std::vector<double> out;
  double norm = 0.0;
  for (const auto& v : spec) norm += std::norm(v);
  for (const auto& v : spec) out.push_back(std::abs(v) / std::sqrt(norm));
  return out;
}

TEST(RecoverSpectral, PipelineKeepsFrameMagnitudes) {
  const auto signal = synth_speech_like(0.5, 8000, 4);
  const int nq = qubits_for_length(signal.samples.size());
  const FramePlan plan(nq, 9);
  auto state = encode(signal, nq);
  GateContext ctx;
  qft_low_qubits(state, plan, ctx);
  const auto estimate = exact_spectrum(state, plan);
  const auto out = recover_spectral(estimate, 8000);

  auto padded = signal.samples;
  padded.resize(state.size(), 0.0);
  const auto expected = frame_magnitudes(padded, 512);
  const auto got = frame_magnitudes(out.samples, 512);
  for (std::size_t i = 0; i < got.size(); ++i) ASSERT_NEAR(got[i], expected[i], 1e-10) << i;

  // the unscaled complex reconstruction carries |S| times sqrt(frame size)
  const auto complex_frames = zero_phase_frames(estimate);
  const auto back = oracle::framewise_dft(complex_frames, 512, -1);
  for (std::size_t i = 0; i < back.size(); ++i)
    ASSERT_NEAR(std::abs(back[i]), estimate.magnitudes[i] * std::sqrt(512.0), 1e-10);
}

TEST(Synth, SignificantHarmonicCount) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto s = synth_speech_like(6.5, 8000, seed);
    const double n_i = mean_significant_harmonics(s.samples, 9);
    EXPECT_GE(n_i, 15.0) << seed;
    EXPECT_LE(n_i, 25.0) << seed;
  }
}

TEST(Synth, DeterministicAndBounded) {
  const auto a = synth_speech_like(1.0, 8000, 7);
  const auto b = synth_speech_like(1.0, 8000, 7);
  const auto c = synth_speech_like(1.0, 8000, 8);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_NE(a.samples, c.samples);
  EXPECT_EQ(a.samples.size(), 8000u);
  for (double v : a.samples) {
    EXPECT_GT(v, -1.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(Synth, PureToneHasOneHarmonicPair) {
  const auto s = sine(8000.0 * 20.0 / 512.0, 8000, 512);
  EXPECT_DOUBLE_EQ(mean_significant_harmonics(s.samples, 9), 2.0);
}

}  // namespace
