// Copyright 2026 The Cepstra Authors
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

// Brute-force reference implementations the fast paths are checked against.
// These stay deliberately naive and independent of the library internals.

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace oracles {

/// O(N^2) DFT, e^(-2*pi*i*k*n/N) convention, one-sided power spectrum.
inline std::vector<double> dft_power(std::span<const double> frame) {
  const std::size_t n = frame.size();
  std::vector<double> power(n / 2 + 1);
  for (std::size_t k = 0; k < power.size(); ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(i) / static_cast<double>(n);
      re += frame[i] * std::cos(angle);
      im += frame[i] * std::sin(angle);
    }
    power[k] = re * re + im * im;
  }
  return power;
}

/// Two-sided DFT energy, for Parseval checks.
inline double dft_total_energy(std::span<const double> frame) {
  const std::size_t n = frame.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(i) / static_cast<double>(n);
      re += frame[i] * std::cos(angle);
      im += frame[i] * std::sin(angle);
    }
    total += re * re + im * im;
  }
  return total;
}

/// Direct double-loop evaluation of C(n) = sum_k cos(n*(k-0.5)*pi/F) * E_k.
inline std::vector<double> direct_dct(std::span<const double> energies, int count) {
  const int f = static_cast<int>(energies.size());
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= f; ++k) {
      acc += std::cos(n * (k - 0.5) * std::numbers::pi / f) *
             energies[static_cast<std::size_t>(k - 1)];
    }
    out[static_cast<std::size_t>(n - 1)] = acc;
  }
  return out;
}

/// Direct evaluation of the correlation-coefficient formula
///   (n*sum(xy) - sum(x)*sum(y)) /
///   (sqrt(n*sum(x^2) - sum(x)^2) * sqrt(n*sum(y^2) - sum(y)^2)).
inline double direct_pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) /
         (std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy));
}

/// Filter-bank energy by explicit elementwise accumulation.
inline double brute_filter_energy(std::span<const double> weights,
                                  std::span<const double> power, double floor_eps) {
  double acc = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) acc += weights[k] * power[k];
  return std::log(acc < floor_eps ? floor_eps : acc);
}

}  // namespace oracles
