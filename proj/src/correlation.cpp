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

#include "cepstra/correlation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cepstra/error.hpp"
#include "cepstra/fft.hpp"
#include "cepstra/log.hpp"
#include "cepstra/util.hpp"

namespace cepstra {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    raise(ErrorCode::kLengthMismatch,
          "sequence lengths differ (" + std::to_string(x.size()) + " vs " +
              std::to_string(y.size()) + ")");
  }
  const std::size_t n = x.size();
  if (n < 2) raise(ErrorCode::kDegenerateInput, "need at least two observations");

  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double count = static_cast<double>(n);
  const double num = count * sxy - sx * sy;
  const double var_x = count * sxx - sx * sx;
  const double var_y = count * syy - sy * sy;
  if (var_x <= 0.0 || var_y <= 0.0) {
    raise(ErrorCode::kDegenerateInput, "zero variance input, correlation undefined");
  }
  // |R| >= 1 can only arise from rounding; clamp to the exact endpoint
  if (num * num >= var_x * var_y) return num > 0.0 ? 1.0 : -1.0;
  return num / std::sqrt(var_x * var_y);
}

VectorMode parse_vector_mode(std::string_view text) {
  std::string v(text);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (v == "flatten_truncated" || v == "flatten") return VectorMode::kFlattenTruncated;
  if (v == "mean_frame" || v == "mean") return VectorMode::kMeanFrame;
  if (v == "per_coeff" || v == "per-coeff") return VectorMode::kPerCoeff;
  raise(ErrorCode::kBadEnumValue, "unknown vector mode '" + std::string(text) + "'");
}

std::string_view vector_mode_name(VectorMode mode) {
  switch (mode) {
    case VectorMode::kFlattenTruncated: return "flatten_truncated";
    case VectorMode::kMeanFrame: return "mean_frame";
    case VectorMode::kPerCoeff: return "per_coeff";
  }
  return "flatten_truncated";
}

std::vector<double> feature_vector(const MfccMatrix& m, VectorMode mode,
                                   std::size_t other_frames) {
  if (m.num_coeffs == 0 || m.num_frames == 0) {
    raise(ErrorCode::kTooFewFrames, "feature matrix is empty");
  }
  std::vector<double> out;
  switch (mode) {
    case VectorMode::kFlattenTruncated:
    case VectorMode::kPerCoeff: {
      const std::size_t frames = std::min(m.num_frames, other_frames);
      const std::size_t length = m.num_coeffs * frames;
      if ((mode == VectorMode::kPerCoeff && frames < 2) || length < 2) {
        raise(ErrorCode::kTooFewFrames,
              "truncated length " + std::to_string(frames) +
                  " is too short to correlate");
      }
      out.reserve(length);
      for (std::size_t r = 0; r < m.num_coeffs; ++r) {
        const auto row = m.row(r);
        out.insert(out.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(frames));
      }
      return out;
    }
    case VectorMode::kMeanFrame: {
      if (m.num_coeffs < 2) {
        raise(ErrorCode::kTooFewCoeffs,
              "mean-frame vectors need at least two coefficients");
      }
      out.reserve(m.num_coeffs);
      for (std::size_t r = 0; r < m.num_coeffs; ++r) {
        double acc = 0.0;
        for (double v : m.row(r)) acc += v;
        out.push_back(acc / static_cast<double>(m.num_frames));
      }
      return out;
    }
  }
  raise(ErrorCode::kBadEnumValue, "unhandled vector mode");
}

double correlate_pair(const MfccMatrix& a, const MfccMatrix& b, VectorMode mode) {
  if (a.num_coeffs != b.num_coeffs) {
    raise(ErrorCode::kLengthMismatch,
          "coefficient counts differ (" + std::to_string(a.num_coeffs) + " vs " +
              std::to_string(b.num_coeffs) + ")");
  }
  if (mode == VectorMode::kPerCoeff) {
    const std::size_t frames = std::min(a.num_frames, b.num_frames);
    if (frames < 2) {
      raise(ErrorCode::kTooFewFrames, "per-coefficient trajectories need two frames");
    }
    double acc = 0.0;
    for (std::size_t r = 0; r < a.num_coeffs; ++r) {
      acc += pearson(a.row(r).subspan(0, frames), b.row(r).subspan(0, frames));
    }
    return acc / static_cast<double>(a.num_coeffs);
  }
  const std::vector<double> va = feature_vector(a, mode, b.num_frames);
  const std::vector<double> vb = feature_vector(b, mode, a.num_frames);
  return pearson(va, vb);
}

namespace {

CorrelationMatrix make_matrix(std::span<const LabeledFeatures> group_a,
                              std::span<const LabeledFeatures> group_b,
                              VectorMode mode, int jobs, bool symmetric) {
  if (group_a.empty() || group_b.empty()) {
    raise(ErrorCode::kEmptyGroup, "cannot correlate an empty group");
  }
  CorrelationMatrix m;
  m.rows = group_a.size();
  m.cols = group_b.size();
  m.symmetric = symmetric;
  m.entries.assign(m.rows * m.cols, std::nullopt);
  for (const auto& e : group_a) m.row_labels.push_back(e.label);
  for (const auto& e : group_b) m.col_labels.push_back(e.label);

  parallel_for(m.rows * m.cols, jobs, [&](std::size_t cell) {
    const std::size_t r = cell / m.cols;
    const std::size_t c = cell % m.cols;
    try {
      m.at(r, c) = correlate_pair(group_a[r].features, group_b[c].features, mode);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kDegenerateInput) throw;
      // undefined correlation stays a hole in the matrix, never a silent zero
      log_warn("correlation " + group_a[r].label + " x " + group_b[c].label +
               " is undefined: " + err.what());
    }
  });
  return m;
}

}  // namespace

CorrelationMatrix correlation_matrix(std::span<const LabeledFeatures> group_a,
                                     std::span<const LabeledFeatures> group_b,
                                     VectorMode mode, int jobs) {
  return make_matrix(group_a, group_b, mode, jobs, /*symmetric=*/false);
}

CorrelationMatrix correlation_matrix(std::span<const LabeledFeatures> group,
                                     VectorMode mode, int jobs) {
  return make_matrix(group, group, mode, jobs, /*symmetric=*/true);
}

StrengthLabel classify_strength(double r) {
  if (!(r >= -1.0 && r <= 1.0)) {
    raise(ErrorCode::kOutOfRange,
          "correlation " + format_double(r) + " lies outside [-1, 1]");
  }
  const double magnitude = std::fabs(r);
  StrengthLabel label;
  label.negative = r < 0.0;
  if (magnitude < 0.5) {
    label.level = Strength::kLow;
  } else if (magnitude < 0.7) {
    label.level = Strength::kModerate;
  } else {
    label.level = Strength::kHigh;
  }
  return label;
}

std::string strength_label_text(StrengthLabel label) {
  std::string text;
  switch (label.level) {
    case Strength::kLow: text = "Low"; break;
    case Strength::kModerate: text = "Moderate"; break;
    case Strength::kHigh: text = "High"; break;
  }
  text += label.negative ? " negative" : " positive";
  text += " correlation";
  return text;
}

SimilaritySummary summarize(const CorrelationMatrix& matrix, Cohort cohort_a,
                            Cohort cohort_b, SoundKind kind) {
  std::vector<double> included;
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    for (std::size_t c = matrix.symmetric ? r + 1 : 0; c < matrix.cols; ++c) {
      if (matrix.at(r, c).has_value()) included.push_back(*matrix.at(r, c));
    }
  }
  if (included.empty()) {
    raise(ErrorCode::kNoEntries, "matrix has no entries to aggregate");
  }

  double mean = 0.0;
  for (double v : included) mean += v;
  mean /= static_cast<double>(included.size());
  double variance = 0.0;
  for (double v : included) variance += (v - mean) * (v - mean);
  variance /= static_cast<double>(included.size());

  SimilaritySummary summary;
  summary.cohort_a = cohort_a;
  summary.cohort_b = cohort_b;
  summary.kind = kind;
  summary.average = mean;
  summary.variance = variance;
  summary.strength = classify_strength(mean);
  summary.count = included.size();
  return summary;
}

double waveform_correlation(const AudioClip& a, const AudioClip& b) {
  validate_clip(a);
  validate_clip(b);
  const std::size_t n = std::min(a.samples.size(), b.samples.size());
  return pearson({a.samples.data(), n}, {b.samples.data(), n});
}

namespace {

std::vector<double> mean_power_spectrum(const AudioClip& clip, int fft_size) {
  const std::size_t n = clip.samples.size();
  const auto frame = static_cast<std::size_t>(fft_size);
  if (n < frame) {
    raise(ErrorCode::kSignalTooShort,
          "clip of " + std::to_string(n) + " samples is shorter than one " +
              std::to_string(fft_size) + "-sample frame");
  }
  std::vector<double> mean(frame / 2 + 1, 0.0);
  std::size_t count = 0;
  for (std::size_t offset = 0; offset + frame <= n; offset += frame) {
    const std::vector<double> power =
        power_spectrum_frame({clip.samples.data() + offset, frame});
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += power[k];
    ++count;
  }
  for (double& v : mean) v /= static_cast<double>(count);
  return mean;
}

}  // namespace

double spectrum_correlation(const AudioClip& a, const AudioClip& b, int fft_size) {
  validate_clip(a);
  validate_clip(b);
  const std::vector<double> sa = mean_power_spectrum(a, fft_size);
  const std::vector<double> sb = mean_power_spectrum(b, fft_size);
  return pearson(sa, sb);
}

std::string correlation_matrix_to_csv(const CorrelationMatrix& matrix) {
  std::string out;
  for (const auto& label : matrix.col_labels) {
    out += ',';
    out += label;
  }
  out += '\n';
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    out += matrix.row_labels[r];
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      out += ',';
      if (matrix.at(r, c).has_value()) out += format_double(*matrix.at(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cepstra
