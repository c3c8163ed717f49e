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

#include "qsonus/sawtooth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsonus/errors.hpp"
#include "qsonus/fft.hpp"
#include "qsonus/qft.hpp"

namespace qsonus {

SawtoothParams SawtoothParams::from_chaos(int n_qubits, double chaos, int iterations) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw ArgumentError("sawtooth map needs 1 <= n_q <= " + std::to_string(StateVector::kMaxQubits));
  }
  SawtoothParams p;
  p.n_qubits = n_qubits;
  p.kinetic = 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << n_qubits);
  p.kick = chaos / p.kinetic;
  p.iterations = iterations;
  return p;
}

std::size_t momentum_register_index(long momentum, int n_qubits) {
  const long n = 1L << n_qubits;
  if (momentum + n / 2 < 1 || momentum + n / 2 > n) {
    throw IndexError("momentum " + std::to_string(momentum) + " outside [" +
                     std::to_string(1 - n / 2) + ", " + std::to_string(n / 2) + "]");
  }
  return static_cast<std::size_t>(((-momentum) % n + n) % n);
}

long momentum_at_register_index(std::size_t index, int n_qubits) {
  const long n = 1L << n_qubits;
  long l = (n - static_cast<long>(index)) % n;
  if (l >= n / 2) l -= n;
  return l;
}

StateVector momentum_eigenstate(const SawtoothParams& params, long momentum) {
  auto state = StateVector::basis(params.n_qubits, momentum_register_index(momentum, params.n_qubits));
  GateContext exact;
  inverse_qft_full(state, exact);
  return state;
}

void apply_quadratic_phase(StateVector& state, std::span<const double> weights, double scale,
                           GateContext& ctx) {
  if (weights.size() != static_cast<std::size_t>(state.n_qubits())) {
    throw ArgumentError("quadratic phase needs one weight per qubit");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i; j < weights.size(); ++j) {
      const double coefficient = (i == j ? 1.0 : 2.0) * weights[i] * weights[j];
      apply_pair_phase(state, Qubit{static_cast<int>(i) + 1}, Qubit{static_cast<int>(j) + 1},
                       scale * coefficient, ctx);
    }
  }
}

void apply_kick(StateVector& state, const SawtoothParams& params, GateContext& ctx) {
  // theta_n = sum_i a_i * 2 pi 2^{n_q - i} / N
  const int nq = params.n_qubits;
  const double n = static_cast<double>(params.dimension());
  std::vector<double> weights(static_cast<std::size_t>(nq));
  for (int i = 1; i <= nq; ++i) {
    weights[static_cast<std::size_t>(i - 1)] = 2.0 * std::numbers::pi * std::ldexp(1.0, nq - i) / n;
  }
  apply_quadratic_phase(state, weights, params.kick / 2.0, ctx);
}

void apply_rotation(StateVector& state, const SawtoothParams& params, GateContext& ctx) {
  // Register index j carries l = -j (mod N); l^2 equals the square of the
  // two's-complement value of j, whose top digit weighs -N/2.
  const int nq = params.n_qubits;
  std::vector<double> weights(static_cast<std::size_t>(nq));
  for (int i = 1; i <= nq; ++i) weights[static_cast<std::size_t>(i - 1)] = std::ldexp(1.0, nq - i);
  weights[0] = -weights[0];

  qft_full(state, ctx);
  apply_quadratic_phase(state, weights, -params.kinetic / 2.0, ctx);
  inverse_qft_full(state, ctx);
}

void iterate_map(StateVector& state, const SawtoothParams& params, GateContext& ctx) {
  if (state.n_qubits() != params.n_qubits) {
    throw ArgumentError("sawtooth parameters do not match the register size");
  }
  for (int t = 0; t < params.iterations; ++t) {
    apply_kick(state, params, ctx);
    apply_rotation(state, params, ctx);
  }
}

std::vector<Amplitude> momentum_amplitudes(const StateVector& theta_state) {
  const auto by_residue = classical_ifft_frame(theta_state.amplitudes());
  const std::size_t n = by_residue.size();
  std::vector<Amplitude> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = by_residue[(i + n / 2) % n];
  return out;
}

CoarseGrid spectrum_columns_by_momentum(const CoarseGrid& grid) {
  CoarseGrid out = grid;
  const std::size_t cols = grid.cols;
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.at(r, c) = grid.at(r, (cols / 2 + cols - c) % cols);
    }
  }
  return out;
}

CoarseGrid as_coarse_grid(const HusimiGrid& grid) {
  CoarseGrid out;
  out.rows = grid.theta_cells;
  out.cols = grid.momentum_cells;
  out.values = grid.values;
  return out;
}

PcmSignal quantum_sound(StateVector theta_state, const FramePlan& plan, const Readout& readout,
                        const NoiseModel& noise) {
  GateContext ctx(noise);
  qft_low_qubits(theta_state, plan, ctx);
  auto rng = noise.sampling_stream();
  auto estimate = read_spectrum(theta_state, plan, readout, rng);
  return recover_spectral(estimate, kSawtoothRate);
}

}  // namespace qsonus
