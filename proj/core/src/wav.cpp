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
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "qsonus/audio.hpp"
#include "qsonus/errors.hpp"

namespace qsonus {

namespace {

constexpr double kPcmScale = 32768.0;

std::uint32_t read_u32(const unsigned char* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
         std::uint32_t{p[3]} << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>(v >> 8));
}

std::string fourcc(const unsigned char* p) { return std::string(reinterpret_cast<const char*>(p), 4); }

}  // namespace

PcmSignal load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open WAV file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || fourcc(data) != "RIFF") throw FormatError("RIFF header: missing 'RIFF' tag");
  if (fourcc(data + 8) != "WAVE") throw FormatError("RIFF header: form type is not 'WAVE'");

  bool have_fmt = false;
  PcmSignal signal;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const std::string id = fourcc(data + pos);
    const std::uint32_t len = read_u32(data + pos + 4);
    const std::size_t body = pos + 8;
    if (body + len > size) throw FormatError("chunk '" + id + "': truncated");

    if (id == "fmt ") {
      if (len < 16) throw FormatError("chunk 'fmt ': too short");
      const std::uint16_t format = read_u16(data + body);
      const std::uint16_t channels = read_u16(data + body + 2);
      const std::uint32_t rate = read_u32(data + body + 4);
      const std::uint16_t bits = read_u16(data + body + 14);
      if (format != 1) {
        throw FormatError("chunk 'fmt ': audio format " + std::to_string(format) +
                          " is not PCM (1)");
      }
      if (channels != 1) {
        throw FormatError("chunk 'fmt ': " + std::to_string(channels) + " channels, need mono");
      }
      if (bits != 16) {
        throw FormatError("chunk 'fmt ': " + std::to_string(bits) + " bits per sample, need 16");
      }
      if (rate == 0) throw FormatError("chunk 'fmt ': sample rate is zero");
      signal.rate = rate;
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw FormatError("chunk 'data': appears before 'fmt '");
      if (len % 2 != 0) throw FormatError("chunk 'data': odd byte count for 16-bit samples");
      signal.samples.resize(len / 2);
      for (std::size_t i = 0; i < signal.samples.size(); ++i) {
        const auto raw = static_cast<std::int16_t>(read_u16(data + body + 2 * i));
        signal.samples[i] = raw / kPcmScale;
      }
      return signal;
    }
    pos = body + len + (len & 1);
  }
  if (!have_fmt) throw FormatError("chunk 'fmt ': not found");
  throw FormatError("chunk 'data': not found");
}

void save_wav(const PcmSignal& signal, const std::filesystem::path& path) {
  const auto n = static_cast<std::uint32_t>(signal.samples.size());
  const std::uint32_t data_bytes = 2 * n;
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);
  put_u16(out, 1);
  put_u32(out, signal.rate);
  put_u32(out, signal.rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (double s : signal.samples) {
    const double q = std::round(std::clamp(s, -32767.0 / kPcmScale, 32767.0 / kPcmScale) * kPcmScale);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot write WAV file " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

}  // namespace qsonus
