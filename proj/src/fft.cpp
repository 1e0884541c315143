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

#include "cepstra/fft.hpp"

#include <cmath>
#include <numbers>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"

namespace cepstra {

void fft_inplace(std::vector<std::complex<double>>& values) {
  const std::size_t n = values.size();
  if (n == 0 || !is_power_of_two(n)) {
    raise(ErrorCode::kNonPowerOfTwoFrame,
          "FFT size " + std::to_string(n) + " is not a power of two");
  }
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(values[i], values[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t start = 0; start < n; start += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> even = values[start + k];
        const std::complex<double> odd = values[start + k + len / 2] * w;
        values[start + k] = even + odd;
        values[start + k + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
}

std::vector<double> power_spectrum_frame(std::span<const double> frame) {
  std::vector<std::complex<double>> spectrum(frame.begin(), frame.end());
  fft_inplace(spectrum);
  const std::size_t bins = frame.size() / 2 + 1;
  std::vector<double> power(bins);
  for (std::size_t k = 0; k < bins; ++k) power[k] = std::norm(spectrum[k]);
  return power;
}

}  // namespace cepstra
