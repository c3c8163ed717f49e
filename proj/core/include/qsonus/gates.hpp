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

#include "qsonus/noise.hpp"
#include "qsonus/state_vector.hpp"

namespace qsonus {

// Gate set of the simulator. All gates act in place, check their qubit
// arguments (IndexError / ArgumentError) and bump the context tally.

/// Hadamard on qubit q. With angle error d the applied unitary is
/// cos(d) H - i sin(d) I, the axis-(X+Z)/sqrt2 rotation with its angle pi/2
/// shifted by d, up to the global phase that makes d = 0 exactly H.
void apply_hadamard(StateVector& state, Qubit q, GateContext& ctx);

/// Multiplies amplitudes with a_control = a_target = 1 by e^{i(angle + d)}.
void apply_controlled_phase(StateVector& state, Qubit control, Qubit target, double angle,
                            GateContext& ctx);

/// Diagonal two-qubit phase used by quadratic-form decompositions. For
/// q1 == q2 it is the single-qubit phase on a_q = 1; otherwise it acts like
/// apply_controlled_phase. Tallied as a diagonal pair phase.
void apply_pair_phase(StateVector& state, Qubit q1, Qubit q2, double angle, GateContext& ctx);

/// Exchanges digits a_q1 and a_q2. Never perturbed by noise.
void apply_swap(StateVector& state, Qubit q1, Qubit q2, GateContext& ctx);

}  // namespace qsonus
