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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cepstra/audio.hpp"
#include "cepstra/manifest.hpp"
#include "cepstra/mfcc.hpp"

namespace cepstra {

/// Pearson correlation coefficient
///   R = (n*sum(xy) - sum(x)*sum(y)) /
///       (sqrt(n*sum(x^2) - sum(x)^2) * sqrt(n*sum(y^2) - sum(y)^2))
/// clamped to [-1, 1] to absorb rounding. pearson(x, x) is exactly 1 and
/// pearson(x, -x) exactly -1.
/// Errors: LengthMismatch; DegenerateInput when either input has zero
/// variance (R undefined); BadConfig for n < 2.
double pearson(std::span<const double> x, std::span<const double> y);

/// How two coefficient matrices of possibly different frame counts become
/// comparable vectors.
enum class VectorMode {
  kFlattenTruncated,  // truncate both to the shorter frame count, flatten row-major
  kMeanFrame,         // per-coefficient mean across frames
  kPerCoeff,          // correlate per-coefficient trajectories, then average
};

VectorMode parse_vector_mode(std::string_view text);  // BadEnumValue
std::string_view vector_mode_name(VectorMode mode);

/// Builds the comparison vector for one matrix. other_frames is the partner's
/// frame count (used for truncation; pass m.num_frames when not pairing).
/// Errors: TooFewFrames / TooFewCoeffs per mode.
std::vector<double> feature_vector(const MfccMatrix& m, VectorMode mode,
                                   std::size_t other_frames);

/// Pearson correlation between two recordings' coefficient matrices.
/// Errors: LengthMismatch when coefficient counts differ; propagates
/// feature_vector and pearson errors.
double correlate_pair(const MfccMatrix& a, const MfccMatrix& b, VectorMode mode);

/// Pairwise R values between two recording groups. Missing entries mark pairs
/// whose correlation is undefined (degenerate features).
struct CorrelationMatrix {
  std::vector<std::optional<double>> entries;  // rows x cols, row-major
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  bool symmetric = false;

  std::optional<double>& at(std::size_t r, std::size_t c) {
    return entries[r * cols + c];
  }
  const std::optional<double>& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

struct LabeledFeatures {
  std::string label;
  MfccMatrix features;
};

/// Cross-group matrix: entry (i, j) = correlate_pair(a[i], b[j], mode).
/// Degenerate pairs become missing entries (with a diagnostic), never 0.
/// Errors: EmptyGroup.
CorrelationMatrix correlation_matrix(std::span<const LabeledFeatures> group_a,
                                     std::span<const LabeledFeatures> group_b,
                                     VectorMode mode, int jobs = 1);

/// Within-group matrix: symmetric with an exact unit diagonal.
CorrelationMatrix correlation_matrix(std::span<const LabeledFeatures> group,
                                     VectorMode mode, int jobs = 1);

enum class Strength { kLow, kModerate, kHigh };

struct StrengthLabel {
  Strength level = Strength::kLow;
  bool negative = false;

  bool operator==(const StrengthLabel&) const = default;
};

/// |R| < 0.5 -> Low, 0.5 <= |R| < 0.7 -> Moderate, |R| >= 0.7 -> High, with a
/// positive/negative qualifier from the sign (R = 0 counts as positive).
/// Errors: OutOfRange outside [-1, 1].
StrengthLabel classify_strength(double r);

/// Table vocabulary, e.g. "High positive correlation".
std::string strength_label_text(StrengthLabel label);

/// One aggregate row: mean / population variance of the compared entries of a
/// single (cohort pair, sound kind) matrix.
struct SimilaritySummary {
  Cohort cohort_a = Cohort::kHealthy;
  Cohort cohort_b = Cohort::kCovid;
  SoundKind kind = SoundKind::kCough;
  double average = 0.0;
  double variance = 0.0;
  StrengthLabel strength;
  std::size_t count = 0;
};

/// Cross-group matrices aggregate every present entry; symmetric matrices
/// only the strict upper triangle (the self-correlation diagonal never
/// contributes). Errors: NoEntries when nothing is included.
SimilaritySummary summarize(const CorrelationMatrix& matrix, Cohort cohort_a,
                            Cohort cohort_b, SoundKind kind);

/// Raw-sample Pearson baseline; both clips truncated to the shorter length.
double waveform_correlation(const AudioClip& a, const AudioClip& b);

/// Pearson between the two clips' mean one-sided power spectra (frames cut at
/// hop = fft_size). Errors: SignalTooShort when a clip is shorter than one
/// frame.
double spectrum_correlation(const AudioClip& a, const AudioClip& b, int fft_size);

/// CSV: first row and column carry the recording labels; missing entries are
/// empty cells.
std::string correlation_matrix_to_csv(const CorrelationMatrix& matrix);

}  // namespace cepstra
