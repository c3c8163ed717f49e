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
#include <span>

namespace qsonus {

/// |sum a_n b_n| / sqrt(sum a_n^2 * sum b_n^2). Throws ArgumentError on a
/// length mismatch, DegenerateInputError when either input has zero norm.
double fidelity(std::span<const double> a, std::span<const double> b);

/// Pearson correlation coefficient of two equally long sequences.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

/// Fidelity plateau for fully scrambled spectra: sqrt(n_i / 2^{n_f}).
double residual_estimate(double significant_harmonics, int frame_qubits);

struct NoisePoint {
  double epsilon;
  double fidelity;
};

struct QuadraticFit {
  /// c in 1 - f = c * epsilon^2 * n_f^2 (least squares through the origin).
  double coefficient = 0.0;
  /// Root-mean-square residual of that fit.
  double residual = 0.0;
  /// p in 1 - f = a * epsilon^p (least squares in log-log).
  double exponent = 0.0;
  double prefactor = 0.0;
  std::size_t points = 0;
};

/// Points outside 0 < epsilon <= 0.1 are ignored. `baseline_deficit` is
/// subtracted from every 1 - f before fitting; pass the epsilon = 0 deficit
/// at the same measurement count to separate sampling error from gate error.
/// Throws FitError with fewer than three usable points, with a single
/// distinct epsilon, or when a log-log point would be non-positive.
QuadraticFit fit_quadratic(std::span<const NoisePoint> points, int frame_qubits,
                           double baseline_deficit = 0.0);

inline constexpr double kFitMaxEpsilon = 0.1;

}  // namespace qsonus
