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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cepstra/config.hpp"
#include "cepstra/correlation.hpp"

namespace cepstra {

/// Where the numbers came from: the config that produced them, a digest of
/// the manifest bytes and the tool version. Stable for identical inputs.
struct Provenance {
  RunConfig config;
  std::string manifest_digest;
  std::string tool_version = std::string(kToolVersion);
};

/// Everything one batch analysis produced: per-(pair, kind) aggregate rows
/// plus the named matrices behind them.
struct AnalysisReport {
  std::vector<SimilaritySummary> summaries;
  std::vector<std::pair<std::string, CorrelationMatrix>> matrices;
  Provenance provenance;
};

/// Plain-text table, one row per (cohort pair, kind): columns Test, Samples,
/// Average, Variance, Strength. Averages and variances are printed to two
/// decimals (round half away from zero); rows are ordered cross-cohort pairs
/// first, kinds in cough, breath, voice order. Errors: EmptyReport.
std::string render_table(const AnalysisReport& report);

/// Fill color for one matrix cell: white at R = 0 ramping linearly to a dark
/// blue at R = 1; negative values use a red ramp of the same magnitude
/// mapping. Luminance is strictly monotone in |R|.
struct Rgb {
  int r = 255, g = 255, b = 255;
  double luminance() const { return 0.2126 * r + 0.7152 * g + 0.0722 * b; }
  bool operator==(const Rgb&) const = default;
};
Rgb heatmap_color(double value);

/// Standalone SVG heatmap: one cell per entry (dark = strong), hatched cells
/// for missing entries, axis labels from the matrix labels and a color-scale
/// legend. Rendering is pure: identical matrices give identical bytes.
std::string render_heatmap_svg(const CorrelationMatrix& matrix);
void render_heatmap(const CorrelationMatrix& matrix, const std::filesystem::path& path);

/// Canonical JSON (sorted keys, floats at 12 significant digits) so reruns
/// are byte-identical and diffable. Errors: EmptyReport.
std::string report_to_json(const AnalysisReport& report);
void write_report_json(const AnalysisReport& report, const std::filesystem::path& path);

/// Canonical JSON for a single summary: {average, count, kind, pair,
/// strength, variance}.
std::string summary_to_json(const SimilaritySummary& summary);

}  // namespace cepstra
