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
#include <cmath>
#include <numbers>
#include <string>

#include "qsonus/errors.hpp"
#include "qsonus/fft.hpp"
#include "qsonus/parallel.hpp"
#include "qsonus/sawtooth.hpp"

namespace qsonus {

namespace {

// Window weight G(d) for momentum offset d = l' - l.
double window(double d, const SawtoothParams& params, const HusimiOptions& options) {
  const double n = static_cast<double>(params.dimension());
  if (options.smoothing == Smoothing::Box) {
    const double half = static_cast<double>(options.box_width) / 2.0;
    return (d >= -half && d < half) ? 1.0 / std::sqrt(n * static_cast<double>(options.box_width))
                                    : 0.0;
  }
  const double t = params.kinetic;
  return std::pow(t / std::numbers::pi, 0.25) * std::exp(-t * d * d / 2.0) / std::sqrt(n);
}

}  // namespace

HusimiGrid husimi(const StateVector& theta_state, const SawtoothParams& params,
                  const HusimiOptions& options) {
  const std::size_t n = theta_state.size();
  if (params.dimension() != n) throw ArgumentError("sawtooth parameters do not match the register");
  for (std::size_t cells : {options.theta_cells, options.momentum_cells}) {
    if (!is_power_of_two(cells) || cells > n) {
      throw ArgumentError("Husimi cell counts must be powers of two <= N, got " +
                          std::to_string(cells));
    }
  }
  if (options.smoothing == Smoothing::Box && options.box_width == 0) {
    throw ArgumentError("box window width must be positive");
  }

  // psi(l') by residue l' mod N
  const auto phi = classical_ifft_frame(theta_state.amplitudes());

  const auto cell_width = static_cast<long>(n / options.momentum_cells);
  const long samples = std::clamp<long>(static_cast<long>(options.momentum_samples_per_cell), 1,
                                        cell_width);
  const long step = std::max<long>(1, cell_width / samples);
  const long half_n = static_cast<long>(n / 2);
  const std::size_t rows = options.theta_cells;
  const std::size_t points_per_row = n / rows;

  const std::size_t jobs = options.momentum_cells * static_cast<std::size_t>(samples);
  std::vector<std::vector<double>> row_sums(jobs);

  parallel_for(jobs, [&](std::size_t job) {
    const auto cell = static_cast<long>(job / static_cast<std::size_t>(samples));
    const auto s = static_cast<long>(job % static_cast<std::size_t>(samples));
    const long l = -half_n + cell * cell_width - cell_width / 2 + step / 2 + s * step;

    std::vector<Amplitude> w(n);
    for (std::size_t m = 0; m < n; ++m) {
      // offset of residue m from l, folded into [-N/2, N/2)
      long d = ((static_cast<long>(m) - l) % static_cast<long>(n) + static_cast<long>(n)) %
               static_cast<long>(n);
      if (d >= half_n) d -= static_cast<long>(n);
      w[m] = window(static_cast<double>(d), params, options) * phi[m];
    }
    transform_frames(w, n, Kernel::Positive, false);

    std::vector<double> sums(rows, 0.0);
    for (std::size_t i = 0; i < n; ++i) sums[i / points_per_row] += std::norm(w[i]);
    row_sums[job] = std::move(sums);
  });

  HusimiGrid grid;
  grid.theta_cells = rows;
  grid.momentum_cells = options.momentum_cells;
  grid.smoothing = options.smoothing;
  grid.values.assign(rows * options.momentum_cells, 0.0);
  const double norm = 1.0 / (static_cast<double>(samples) * static_cast<double>(points_per_row));
  for (std::size_t job = 0; job < jobs; ++job) {
    const std::size_t cell = job / static_cast<std::size_t>(samples);
    for (std::size_t r = 0; r < rows; ++r) {
      grid.values[r * options.momentum_cells + cell] += row_sums[job][r] * norm;
    }
  }
  return grid;
}

}  // namespace qsonus
