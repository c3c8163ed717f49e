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

#include "qsonus/qft.hpp"

#include <numbers>
#include <string>

#include "qsonus/errors.hpp"

namespace qsonus {

FramePlan::FramePlan(int n_qubits, int frame_qubits)
    : n_qubits_(n_qubits), frame_qubits_(frame_qubits) {
  if (n_qubits < 1 || frame_qubits < 1 || frame_qubits > n_qubits) {
    throw ArgumentError("frame plan needs 1 <= n_f <= n_q, got n_q=" + std::to_string(n_qubits) +
                        " n_f=" + std::to_string(frame_qubits));
  }
}

namespace {

void check_plan(const StateVector& state, const FramePlan& plan) {
  if (state.n_qubits() != plan.n_qubits()) {
    throw ArgumentError("frame plan is for " + std::to_string(plan.n_qubits()) +
                        " qubits, register has " + std::to_string(state.n_qubits()));
  }
}

double phase_angle(int distance) {
  return 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << (distance + 1));
}

// Qubits first .. first+count-1, first the most significant.
void bit_reverse(StateVector& state, int first, int count, GateContext& ctx) {
  for (int i = 0; i < count / 2; ++i) {
    apply_swap(state, Qubit{first + i}, Qubit{first + count - 1 - i}, ctx);
  }
}

void qft_block(StateVector& state, int first, int count, GateContext& ctx) {
  for (int i = 0; i < count; ++i) {
    apply_hadamard(state, Qubit{first + i}, ctx);
    for (int j = i + 1; j < count; ++j) {
      apply_controlled_phase(state, Qubit{first + j}, Qubit{first + i}, phase_angle(j - i), ctx);
    }
  }
  bit_reverse(state, first, count, ctx);
}

void inverse_qft_block(StateVector& state, int first, int count, GateContext& ctx) {
  bit_reverse(state, first, count, ctx);
  for (int i = count - 1; i >= 0; --i) {
    for (int j = count - 1; j > i; --j) {
      apply_controlled_phase(state, Qubit{first + j}, Qubit{first + i}, -phase_angle(j - i), ctx);
    }
    apply_hadamard(state, Qubit{first + i}, ctx);
  }
}

}  // namespace

void qft_low_qubits(StateVector& state, const FramePlan& plan, GateContext& ctx) {
  check_plan(state, plan);
  qft_block(state, plan.first_frame_qubit().index, plan.frame_qubits(), ctx);
}

void inverse_qft_low_qubits(StateVector& state, const FramePlan& plan, GateContext& ctx) {
  check_plan(state, plan);
  inverse_qft_block(state, plan.first_frame_qubit().index, plan.frame_qubits(), ctx);
}

void qft_full(StateVector& state, GateContext& ctx) {
  qft_block(state, 1, state.n_qubits(), ctx);
}

void inverse_qft_full(StateVector& state, GateContext& ctx) {
  inverse_qft_block(state, 1, state.n_qubits(), ctx);
}

}  // namespace qsonus
