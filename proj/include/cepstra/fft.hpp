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

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace cepstra {

/// In-place iterative radix-2 DIT transform with the e^(-2*pi*i*k*n/N)
/// convention and no normalization factor. Size must be a power of two
/// (NonPowerOfTwoFrame otherwise).
void fft_inplace(std::vector<std::complex<double>>& values);

/// One-sided power spectrum of a real frame: P(k) = |DFT(frame)(k)|^2 for
/// k = 0..N/2, size N/2 + 1.
std::vector<double> power_spectrum_frame(std::span<const double> frame);

}  // namespace cepstra
