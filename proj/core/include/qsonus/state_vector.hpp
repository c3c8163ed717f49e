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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qsonus {

using Amplitude = std::complex<double>;

/// One-based qubit label. Qubit 1 is the most significant binary digit of
/// the basis index, qubit n_q the least significant.
struct Qubit {
  int index;

  constexpr explicit Qubit(int i) : index(i) {}
  friend constexpr bool operator==(Qubit, Qubit) = default;
};

/// Dense amplitude array of a register of n_q qubits, length 2^{n_q}.
class StateVector {
 public:
  static constexpr int kMaxQubits = 30;

  /// |0...0>
  explicit StateVector(int n_qubits);

  /// Basis state |index>. Throws IndexError when index >= 2^{n_qubits}.
  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Takes ownership of an amplitude array; its length must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }

  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Bit of the basis index carrying digit a_q. Throws IndexError when q is
  /// outside [1, n_q].
  std::size_t mask(Qubit q) const;

  /// Bit position (0 = least significant) of qubit q.
  int bit_position(Qubit q) const;

  void check_qubit(Qubit q) const;

 private:
  StateVector(int n_qubits, std::vector<Amplitude> amps);

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// <a|b>
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// max_n |a_n - b_n|; sizes must match.
double max_abs_difference(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace qsonus
