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

#include "qsonus/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <string>

#include "qsonus/errors.hpp"

namespace qsonus {

namespace {

// FFTW planning is not thread safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FramePlanHandle {
 public:
  FramePlanHandle(std::span<Amplitude> data, std::size_t frame_size, Kernel kernel) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    const int n = static_cast<int>(frame_size);
    const int howmany = static_cast<int>(data.size() / frame_size);
    const int sign = kernel == Kernel::Positive ? FFTW_BACKWARD : FFTW_FORWARD;
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, 1, n, buf, nullptr, 1, n, sign,
                               FFTW_ESTIMATE);
  }
  ~FramePlanHandle() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  FramePlanHandle(const FramePlanHandle&) = delete;
  FramePlanHandle& operator=(const FramePlanHandle&) = delete;

  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

void require_power_of_two(std::size_t n, const char* what) {
  if (!is_power_of_two(n)) {
    throw ArgumentError(std::string(what) + " length must be a power of two, got " +
                        std::to_string(n));
  }
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void transform_frames(std::span<Amplitude> data, std::size_t frame_size, Kernel kernel,
                      bool unitary) {
  require_power_of_two(frame_size, "frame");
  if (data.size() % frame_size != 0) {
    throw ArgumentError("data length is not a whole number of frames");
  }
  if (data.empty()) return;
  FramePlanHandle plan(data, frame_size, kernel);
  plan.execute();
  if (unitary) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(frame_size));
    for (auto& v : data) v *= scale;
  }
}

std::vector<Amplitude> classical_fft_frame(std::span<const Amplitude> samples) {
  require_power_of_two(samples.size(), "FFT");
  std::vector<Amplitude> out(samples.begin(), samples.end());
  transform_frames(out, out.size(), Kernel::Positive);
  return out;
}

std::vector<Amplitude> classical_ifft_frame(std::span<const Amplitude> spectrum) {
  require_power_of_two(spectrum.size(), "FFT");
  std::vector<Amplitude> out(spectrum.begin(), spectrum.end());
  transform_frames(out, out.size(), Kernel::Negative);
  return out;
}

}  // namespace qsonus
