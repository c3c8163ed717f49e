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

#include "qsonus/metrics.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "qsonus/errors.hpp"

namespace qsonus {

double fidelity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("fidelity of sequences of different length");
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (!(aa > 0.0) || !(bb > 0.0)) throw DegenerateInputError("fidelity of a zero-norm sequence");
  return std::abs(ab) / std::sqrt(aa * bb);
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ArgumentError("correlation needs two sequences of equal length >= 2");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) throw DegenerateInputError("correlation of a constant sequence");
  return sab / std::sqrt(saa * sbb);
}

double residual_estimate(double significant_harmonics, int frame_qubits) {
  if (significant_harmonics < 1.0 || frame_qubits < 1) {
    throw ArgumentError("residual estimate needs n_i >= 1 and n_f >= 1");
  }
  return std::sqrt(significant_harmonics / std::ldexp(1.0, frame_qubits));
}

QuadraticFit fit_quadratic(std::span<const NoisePoint> points, int frame_qubits,
                           double baseline_deficit) {
  if (frame_qubits < 1) throw ArgumentError("fit needs n_f >= 1");
  const double nf2 = static_cast<double>(frame_qubits) * frame_qubits;

  std::vector<double> x, y;
  std::set<double> distinct;
  for (const auto& p : points) {
    if (!(p.epsilon > 0.0) || p.epsilon > kFitMaxEpsilon) continue;
    x.push_back(p.epsilon);
    y.push_back(1.0 - p.fidelity - baseline_deficit);
    distinct.insert(p.epsilon);
  }
  if (x.size() < 3) throw FitError("quadratic fit needs at least 3 points with 0 < eps <= 0.1");
  if (distinct.size() < 2) throw FitError("quadratic fit needs at least 2 distinct eps values");

  QuadraticFit fit;
  fit.points = x.size();

  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = x[i] * x[i] * nf2;
    sxy += u * y[i];
    sxx += u * u;
  }
  fit.coefficient = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.coefficient * x[i] * x[i] * nf2;
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(x.size()));

  double mx = 0.0, my = 0.0;
  std::vector<double> lx(x.size()), ly(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > 0.0)) throw FitError("non-positive fidelity deficit; cannot fit a power law");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (lx[i] - mx) * (ly[i] - my);
    var += (lx[i] - mx) * (lx[i] - mx);
  }
  fit.exponent = cov / var;
  fit.prefactor = std::exp(my - fit.exponent * mx);
  return fit;
}

}  // namespace qsonus
