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

#include "qsonus/gates.hpp"
#include "qsonus/state_vector.hpp"

namespace qsonus {

/// Split of an n_q-qubit register into frame number (n_q - n_f most
/// significant qubits) and in-frame position or harmonic (n_f least
/// significant qubits). Basis index n = k * frame_size + m.
class FramePlan {
 public:
  FramePlan(int n_qubits, int frame_qubits);

  int n_qubits() const { return n_qubits_; }
  int frame_qubits() const { return frame_qubits_; }
  std::size_t frame_size() const { return std::size_t{1} << frame_qubits_; }
  std::size_t frame_count() const { return std::size_t{1} << (n_qubits_ - frame_qubits_); }

  /// First (most significant) qubit of the frame block.
  Qubit first_frame_qubit() const { return Qubit{n_qubits_ - frame_qubits_ + 1}; }

  friend bool operator==(const FramePlan&, const FramePlan&) = default;

 private:
  int n_qubits_;
  int frame_qubits_;
};

/// Quantum Fourier transform on the frame qubits: at zero noise, the unitary
/// DFT with kernel e^{+2 pi i j m / frame_size} applied to every frame.
/// Uses frame_qubits Hadamards, frame_qubits(frame_qubits-1)/2 controlled
/// phases and noiseless bit-reversal swaps. Throws ArgumentError if the
/// plan's qubit count differs from the state's.
void qft_low_qubits(StateVector& state, const FramePlan& plan, GateContext& ctx);

/// Adjoint circuit of qft_low_qubits: reversed gate order, negated angles.
void inverse_qft_low_qubits(StateVector& state, const FramePlan& plan, GateContext& ctx);

void qft_full(StateVector& state, GateContext& ctx);
void inverse_qft_full(StateVector& state, GateContext& ctx);

/// n_f(n_f+1)/2.
constexpr std::size_t qft_rotation_count(int frame_qubits) {
  const auto n = static_cast<std::size_t>(frame_qubits);
  return n * (n + 1) / 2;
}

}  // namespace qsonus
