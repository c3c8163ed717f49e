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

#include "qsonus/audio.hpp"
#include "qsonus/gates.hpp"
#include "qsonus/measurement.hpp"
#include "qsonus/state_vector.hpp"

namespace qsonus {

/// Quantum sawtooth map U = exp(-i T l^2 / 2) exp(i k theta^2 / 2) on an
/// N = 2^{n_q} point grid, theta_n = 2 pi n / N.
struct SawtoothParams {
  int n_qubits = 14;
  double kick = 0.0;     // k
  double kinetic = 0.0;  // T
  int iterations = 0;

  /// T = 2 pi / N and k = K / T, so that k * T == K.
  static SawtoothParams from_chaos(int n_qubits, double chaos, int iterations);

  std::size_t dimension() const { return std::size_t{1} << n_qubits; }
  double chaos() const { return kick * kinetic; }
};

// Momentum convention: qft_full takes the theta representation to the
// momentum register, where basis index j holds momentum l = -j (mod N).
// Momenta are labelled by their representative in [-N/2, N/2].

/// Register index holding momentum l. Throws IndexError unless
/// l + N/2 lies in 1..N.
std::size_t momentum_register_index(long momentum, int n_qubits);

/// Representative in [-N/2, N/2) of the momentum stored at register index j.
long momentum_at_register_index(std::size_t index, int n_qubits);

/// Theta-representation state e^{i l0 theta_n} / sqrt(N), prepared by the
/// exact inverse QFT of the momentum basis state.
StateVector momentum_eigenstate(const SawtoothParams& params, long momentum);

/// Applies exp(i * scale * (sum_i w_i a_i)^2) as one pair phase per qubit
/// pair i <= j (diagonal terms once, cross terms with doubled angle).
/// weights[i] belongs to qubit i + 1.
void apply_quadratic_phase(StateVector& state, std::span<const double> weights, double scale,
                           GateContext& ctx);

/// exp(i k theta^2 / 2) through n_q(n_q+1)/2 pair phases.
void apply_kick(StateVector& state, const SawtoothParams& params, GateContext& ctx);

/// qft_full, exp(-i T l^2 / 2) as pair phases, inverse_qft_full.
void apply_rotation(StateVector& state, const SawtoothParams& params, GateContext& ctx);

/// params.iterations applications of kick followed by rotation.
void iterate_map(StateVector& state, const SawtoothParams& params, GateContext& ctx);

/// Momentum amplitudes psi(l), index l + N/2 for l in [-N/2, N/2).
std::vector<Amplitude> momentum_amplitudes(const StateVector& theta_state);

enum class Smoothing { Gaussian, Box };

struct HusimiOptions {
  Smoothing smoothing = Smoothing::Gaussian;
  /// Width of the constant box window in momentum units.
  std::size_t box_width = 32;
  std::size_t theta_cells = 32;
  std::size_t momentum_cells = 32;
  /// Momentum sample points averaged per cell (clamped to the cell width).
  std::size_t momentum_samples_per_cell = 64;
};

/// |h(l, theta)|^2 averaged over cells. Rows are theta cells in increasing
/// theta; column c is centred on l = -N/2 + c * N / momentum_cells.
struct HusimiGrid {
  std::size_t theta_cells = 0;
  std::size_t momentum_cells = 0;
  Smoothing smoothing = Smoothing::Gaussian;
  std::vector<double> values;

  double at(std::size_t theta, std::size_t l) const { return values[theta * momentum_cells + l]; }
};

/// Throws ArgumentError unless the cell counts are powers of two not
/// exceeding N.
HusimiGrid husimi(const StateVector& theta_state, const SawtoothParams& params,
                  const HusimiOptions& options = {});

/// Reorders the harmonic columns of a framewise-QFT coarse diagram so that
/// column c matches Husimi momentum column c (harmonic j carries l = -j N / 2^{cols}).
CoarseGrid spectrum_columns_by_momentum(const CoarseGrid& grid);

/// Husimi values as a CoarseGrid so it can be rendered like the spectra.
CoarseGrid as_coarse_grid(const HusimiGrid& grid);

/// Framewise QFT on the frame qubits, spectrum readout, zero-phase
/// reconstruction at 1 kHz.
PcmSignal quantum_sound(StateVector theta_state, const FramePlan& plan, const Readout& readout,
                        const NoiseModel& noise);

}  // namespace qsonus
