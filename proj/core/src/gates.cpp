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

#include "qsonus/gates.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qsonus/errors.hpp"

namespace qsonus {

GateContext::GateContext(const NoiseModel& noise)
    : epsilon_(noise.epsilon),
      distribution_(noise.distribution),
      rng_(noise.gate_stream()),
      normal_(0.0, noise.epsilon * std::numbers::pi) {
  if (!(noise.epsilon >= 0.0)) throw ArgumentError("noise amplitude epsilon must be >= 0");
}

GateContext GateContext::with_fixed_error(double delta) {
  GateContext ctx;
  ctx.fixed_error_ = delta;
  return ctx;
}

double GateContext::angle_error() {
  if (fixed_error_) return *fixed_error_;
  if (epsilon_ == 0.0) return 0.0;
  if (distribution_ == NoiseDistribution::Gaussian) return normal_(rng_);
  const double amplitude = epsilon_ * std::numbers::pi;
  return rng_.uniform(-amplitude, amplitude);
}

void apply_hadamard(StateVector& state, Qubit q, GateContext& ctx) {
  const std::size_t m = state.mask(q);
  const double delta = ctx.angle_error();
  const double c = std::cos(delta) * (1.0 / std::numbers::sqrt2);
  const Amplitude minus_i_sin{0.0, -std::sin(delta)};
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & m) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | m];
    amps[i] = c * (a0 + a1) + minus_i_sin * a0;
    amps[i | m] = c * (a0 - a1) + minus_i_sin * a1;
  }
  ++ctx.tally().hadamards;
}

namespace {

void phase_on_mask(StateVector& state, std::size_t mask, double angle) {
  const Amplitude phase = std::polar(1.0, angle);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] *= phase;
  }
}

}  // namespace

void apply_controlled_phase(StateVector& state, Qubit control, Qubit target, double angle,
                            GateContext& ctx) {
  const std::size_t mc = state.mask(control);
  const std::size_t mt = state.mask(target);
  if (control == target) throw ArgumentError("controlled phase needs distinct qubits");
  phase_on_mask(state, mc | mt, angle + ctx.angle_error());
  ++ctx.tally().controlled_phases;
}

void apply_pair_phase(StateVector& state, Qubit q1, Qubit q2, double angle, GateContext& ctx) {
  const std::size_t mask = state.mask(q1) | state.mask(q2);
  phase_on_mask(state, mask, angle + ctx.angle_error());
  ++ctx.tally().diagonal_pair_phases;
}

void apply_swap(StateVector& state, Qubit q1, Qubit q2, GateContext& ctx) {
  const std::size_t m1 = state.mask(q1);
  const std::size_t m2 = state.mask(q2);
  if (q1 == q2) throw ArgumentError("swap needs distinct qubits");
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    // visit each |..1..0..> once and exchange it with |..0..1..>
    if ((i & m1) && !(i & m2)) std::swap(amps[i], amps[(i & ~m1) | m2]);
  }
  ++ctx.tally().swaps;
}

}  // namespace qsonus
