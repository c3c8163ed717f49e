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

#include <cstddef>
#include <span>
#include <vector>

#include "qsonus/state_vector.hpp"

namespace qsonus {

// Classical FFT routines with unitary normalization. "Forward" uses the
// kernel e^{+2 pi i j m / n} / sqrt(n), the same convention as the quantum
// Fourier transform of this library; "inverse" uses e^{-2 pi i j m / n}.

bool is_power_of_two(std::size_t n);

/// Forward unitary DFT of one frame. Throws ArgumentError unless the length
/// is a power of two.
std::vector<Amplitude> classical_fft_frame(std::span<const Amplitude> samples);
std::vector<Amplitude> classical_ifft_frame(std::span<const Amplitude> spectrum);

enum class Kernel { Positive, Negative };

/// In-place DFT of each contiguous block of `frame_size` values.
/// With `unitary` the result is scaled by 1/sqrt(frame_size).
void transform_frames(std::span<Amplitude> data, std::size_t frame_size, Kernel kernel,
                      bool unitary = true);

}  // namespace qsonus
