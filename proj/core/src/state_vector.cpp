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

#include "qsonus/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsonus/errors.hpp"
#include "qsonus/fft.hpp"

namespace qsonus {

namespace {
void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw ArgumentError("qubit count must be in [1, " + std::to_string(StateVector::kMaxQubits) +
                        "], got " + std::to_string(n_qubits));
  }
}
}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.size()) {
    throw IndexError("basis index " + std::to_string(index) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  if (amps.size() < 2 || !is_power_of_two(amps.size())) {
    throw ArgumentError("amplitude count must be a power of two >= 2, got " +
                        std::to_string(amps.size()));
  }
  const int n = std::countr_zero(amps.size());
  check_qubit_count(n);
  return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

void StateVector::check_qubit(Qubit q) const {
  if (q.index < 1 || q.index > n_qubits_) {
    throw IndexError("qubit " + std::to_string(q.index) + " out of range [1, " +
                     std::to_string(n_qubits_) + "]");
  }
}

int StateVector::bit_position(Qubit q) const {
  check_qubit(q);
  return n_qubits_ - q.index;
}

std::size_t StateVector::mask(Qubit q) const { return std::size_t{1} << bit_position(q); }

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ArgumentError("inner product of registers of different size");
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw ArgumentError("size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qsonus
