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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cepstra/audio.hpp"

namespace cepstra {

/// Knobs for the six-stage extraction pipeline. Defaults: 0.97 pre-emphasis,
/// 256-sample frames stepped by 100, 25 triangular mel filters, 13
/// coefficients of which the first 3 are kept for similarity analysis.
struct MfccConfig {
  double pre_emphasis_a = 0.97;  // 0 disables the high-pass stage
  int frame_len_samples = 256;   // must be a power of two
  int hop_samples = 100;         // must be < frame_len_samples
  int num_filters = 25;
  int num_coeffs = 13;
  int keep_coeffs = 3;    // coefficients used by the similarity stage
  double log_floor = 1e-10;  // filter-energy floor before the log

  /// Throws BadConfig / NonPowerOfTwoFrame on invariant violations.
  void validate() const;
};

/// Contiguous analysis windows cut at offsets 0, hop, 2*hop, ...
struct FrameMatrix {
  std::vector<double> data;  // num_frames x frame_len_samples, row-major
  std::size_t num_frames = 0;
  int frame_len_samples = 0;
  int hop_samples = 0;

  std::span<double> frame(std::size_t i) {
    return {data.data() + i * static_cast<std::size_t>(frame_len_samples),
            static_cast<std::size_t>(frame_len_samples)};
  }
  std::span<const double> frame(std::size_t i) const {
    return {data.data() + i * static_cast<std::size_t>(frame_len_samples),
            static_cast<std::size_t>(frame_len_samples)};
  }
};

/// Per-frame one-sided power spectra.
struct Spectrogram {
  std::vector<double> data;  // num_frames x num_bins, row-major
  std::size_t num_frames = 0;
  std::size_t num_bins = 0;

  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * num_bins, num_bins};
  }
};

/// Precomputed triangular filter weights over FFT bin center frequencies.
/// Boundaries are equally spaced on the mel scale between 0 Hz and Nyquist;
/// each filter rises linearly (in mel) to 1 at its own boundary and falls to
/// 0 at the next, so every row is unimodal with a single peak.
struct MelFilterBank {
  std::vector<double> weights;  // num_filters x num_bins, row-major
  std::vector<double> center_freqs_hz;
  int sample_rate_hz = 0;
  int fft_size = 0;
  int num_filters = 0;

  std::size_t num_bins() const { return static_cast<std::size_t>(fft_size) / 2 + 1; }
  std::span<const double> filter(int i) const {
    return {weights.data() + static_cast<std::size_t>(i) * num_bins(), num_bins()};
  }
};

/// Coefficients-by-frames feature matrix. Row r holds coefficient index
/// n = r + 1; the gain-carrying n = 0 term is never produced.
struct MfccMatrix {
  std::vector<double> data;  // num_coeffs x num_frames, row-major
  std::size_t num_coeffs = 0;
  std::size_t num_frames = 0;
  MfccConfig config;       // snapshot used to produce it
  int sample_rate_hz = 0;

  double at(std::size_t coeff, std::size_t frame) const {
    return data[coeff * num_frames + frame];
  }
  std::span<const double> row(std::size_t coeff) const {
    return {data.data() + coeff * num_frames, num_frames};
  }
};

/// y(0) = x(0); y(n) = x(n) - a*x(n-1). a = 0 is the identity.
AudioClip pre_emphasize(const AudioClip& clip, double a);

/// Cuts frames of `frame_len` samples every `hop` samples; trailing samples
/// that cannot fill a complete frame are dropped. Warns (does not fail) when
/// the frame duration falls outside 20-40 ms at the clip's rate.
/// Errors: SignalTooShort when the clip is shorter than one frame.
FrameMatrix frame_signal(const AudioClip& clip, int frame_len, int hop);

/// w(n) = 0.54 - 0.46*cos(2*pi*n/(N-1)), n = 0..N-1. Symmetric.
std::vector<double> hamming_window(int n);

/// Multiplies every frame elementwise by the Hamming window of its length.
FrameMatrix apply_window(FrameMatrix frames);

/// One-sided power spectrum per frame; frame length must be a power of two.
Spectrogram power_spectrum(const FrameMatrix& frames);

/// m = 2595 * log10(1 + f/1000) and its inverse.
double mel_from_hz(double hz);
double hz_from_mel(double mel);

/// Errors: TooManyFilters when the requested count leaves a filter without
/// meaningful support on the FFT grid (peak weight below 0.5).
MelFilterBank build_filterbank(int sample_rate_hz, int fft_size, int num_filters);

/// Log filter-bank energies: E_k = ln(max(sum_bins w[k][bin]*P[bin], floor)).
std::vector<double> filter_energies(std::span<const double> spectrum_row,
                                    const MelFilterBank& bank, double log_floor);

/// C(n) = sum_{k=1..F} cos(n*(k-0.5)*pi/F) * E_k for n = 1..num_coeffs.
/// A constant energy vector maps to all-zero coefficients.
std::vector<double> dct_coeffs(std::span<const double> energies, int num_coeffs);

/// Runs the whole pipeline: pre-emphasis, framing, windowing, power spectrum,
/// mel filter energies, DCT. Output is num_coeffs x num_frames.
MfccMatrix extract_mfcc(const AudioClip& clip, const MfccConfig& cfg);

/// First `keep` coefficient rows, frames untouched.
/// Errors: BadConfig when keep exceeds the available rows.
MfccMatrix select_coeffs(const MfccMatrix& m, int keep);

/// CSV with header frame_0,frame_1,... and one row per coefficient.
std::string mfcc_to_csv(const MfccMatrix& m);

/// JSON object {config, shape, data} with row-major data; lossless round trip
/// through mfcc_from_json.
std::string mfcc_to_json(const MfccMatrix& m);
MfccMatrix mfcc_from_json(const std::string& text);

}  // namespace cepstra
