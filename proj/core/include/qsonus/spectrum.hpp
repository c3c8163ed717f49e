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
#include <cstdint>
#include <span>
#include <vector>

#include "qsonus/qft.hpp"

namespace qsonus {

enum class Provenance { Exact, Sampled, SampledNoisy };

/// Per-frame harmonic magnitudes |S_{k,j}|, row-major [frame][harmonic].
struct SpectrumEstimate {
  FramePlan plan;
  std::vector<double> magnitudes;
  Provenance provenance = Provenance::Exact;
  std::uint64_t shots = 0;
  double epsilon = 0.0;

  explicit SpectrumEstimate(const FramePlan& p)
      : plan(p), magnitudes(p.frame_count() * p.frame_size(), 0.0) {}

  double& at(std::size_t frame, std::size_t harmonic) {
    return magnitudes[frame * plan.frame_size() + harmonic];
  }
  double at(std::size_t frame, std::size_t harmonic) const {
    return magnitudes[frame * plan.frame_size() + harmonic];
  }
  std::span<const double> frame(std::size_t k) const {
    return std::span<const double>(magnitudes).subspan(k * plan.frame_size(), plan.frame_size());
  }
};

}  // namespace qsonus
