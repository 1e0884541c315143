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

#include "cepstra/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"

namespace cepstra {
namespace {

// ---- canonical JSON emission (sorted keys, %.12g floats) ----

std::string json_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_number(double value) { return format_double_12g(value); }

std::string json_string_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += json_string(items[i]);
  }
  out += ']';
  return out;
}

std::string trim_config_json(const TrimConfig& trim) {
  return "{\"threshold_dbfs\":" + json_number(trim.threshold_dbfs) +
         ",\"window_ms\":" + json_number(trim.window_ms) + "}";
}

std::string mfcc_config_json(const MfccConfig& mfcc) {
  return "{\"frame_len_samples\":" + std::to_string(mfcc.frame_len_samples) +
         ",\"hop_samples\":" + std::to_string(mfcc.hop_samples) +
         ",\"keep_coeffs\":" + std::to_string(mfcc.keep_coeffs) +
         ",\"log_floor\":" + json_number(mfcc.log_floor) +
         ",\"num_coeffs\":" + std::to_string(mfcc.num_coeffs) +
         ",\"num_filters\":" + std::to_string(mfcc.num_filters) +
         ",\"pre_emphasis_a\":" + json_number(mfcc.pre_emphasis_a) + "}";
}

std::string run_config_json(const RunConfig& config) {
  return "{\"mfcc\":" + mfcc_config_json(config.mfcc) +
         ",\"mode\":" + json_string(vector_mode_name(config.mode)) +
         ",\"output_dir\":" + json_string(config.output_dir.generic_string()) +
         ",\"seed\":" + std::to_string(config.seed) +
         ",\"trim\":" + trim_config_json(config.trim) + "}";
}

std::string matrix_json(const std::string& name, const CorrelationMatrix& m) {
  std::string out = "{\"col_labels\":" + json_string_list(m.col_labels) + ",\"entries\":[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c > 0) out += ',';
      out += m.at(r, c).has_value() ? json_number(*m.at(r, c)) : "null";
    }
    out += ']';
  }
  out += "],\"name\":" + json_string(name) +
         ",\"row_labels\":" + json_string_list(m.row_labels) +
         ",\"symmetric\":" + (m.symmetric ? std::string("true") : std::string("false")) +
         "}";
  return out;
}

std::string pair_json(const SimilaritySummary& s) {
  return "[" + json_string(cohort_name(s.cohort_a)) + "," +
         json_string(cohort_name(s.cohort_b)) + "]";
}

int kind_rank(SoundKind kind) {
  switch (kind) {
    case SoundKind::kCough: return 0;
    case SoundKind::kBreath: return 1;
    case SoundKind::kVoice: return 2;
  }
  return 0;
}

// cross-cohort pairs come first, then within-cohort, kinds in
// cough/breath/voice order
std::vector<const SimilaritySummary*> ordered_summaries(const AnalysisReport& report) {
  std::vector<const SimilaritySummary*> rows;
  rows.reserve(report.summaries.size());
  for (const auto& s : report.summaries) rows.push_back(&s);
  std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    const int within_a = a->cohort_a == a->cohort_b ? 1 : 0;
    const int within_b = b->cohort_a == b->cohort_b ? 1 : 0;
    if (within_a != within_b) return within_a < within_b;
    const auto name_a = std::make_pair(cohort_name(a->cohort_a), cohort_name(a->cohort_b));
    const auto name_b = std::make_pair(cohort_name(b->cohort_a), cohort_name(b->cohort_b));
    if (name_a != name_b) return name_a < name_b;
    return kind_rank(a->kind) < kind_rank(b->kind);
  });
  return rows;
}

void check_unique_rows(const AnalysisReport& report) {
  std::set<std::tuple<Cohort, Cohort, SoundKind>> keys;
  for (const auto& s : report.summaries) {
    if (!keys.emplace(s.cohort_a, s.cohort_b, s.kind).second) {
      raise(ErrorCode::kBadConfig, "duplicate (pair, kind) summary in report");
    }
  }
}

}  // namespace

std::string summary_to_json(const SimilaritySummary& s) {
  return "{\"average\":" + json_number(s.average) +
         ",\"count\":" + std::to_string(s.count) +
         ",\"kind\":" + json_string(kind_name(s.kind)) +
         ",\"pair\":" + pair_json(s) +
         ",\"strength\":" + json_string(strength_label_text(s.strength)) +
         ",\"variance\":" + json_number(s.variance) + "}";
}

std::string render_table(const AnalysisReport& report) {
  if (report.summaries.empty()) raise(ErrorCode::kEmptyReport, "report holds no summaries");
  check_unique_rows(report);
  std::string out = "Test | Samples | Average | Variance | Strength\n";
  for (const SimilaritySummary* s : ordered_summaries(report)) {
    out += std::string(cohort_display_name(s->cohort_a)) + " vs " +
           std::string(cohort_display_name(s->cohort_b));
    out += " | ";
    out += kind_display_name(s->kind);
    out += " | ";
    out += format_fixed(s->average, 2);
    out += " | ";
    out += format_fixed(s->variance, 2);
    out += " | ";
    out += strength_label_text(s->strength);
    out += '\n';
  }
  return out;
}

Rgb heatmap_color(double value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    raise(ErrorCode::kOutOfRange,
          "correlation " + format_double(value) + " lies outside [-1, 1]");
  }
  const double t = std::fabs(value);
  const Rgb dark = value >= 0.0 ? Rgb{8, 48, 107} : Rgb{103, 0, 31};
  auto mix = [t](int to) { return static_cast<int>(std::lround(255.0 + t * (to - 255.0))); };
  return {mix(dark.r), mix(dark.g), mix(dark.b)};
}

std::string render_heatmap_svg(const CorrelationMatrix& matrix) {
  if (matrix.rows == 0 || matrix.cols == 0) {
    raise(ErrorCode::kEmptyReport, "cannot render an empty matrix");
  }

  const int cell = 26;
  std::size_t max_row_label = 0, max_col_label = 0;
  for (const auto& l : matrix.row_labels) max_row_label = std::max(max_row_label, l.size());
  for (const auto& l : matrix.col_labels) max_col_label = std::max(max_col_label, l.size());
  const int left = 16 + 7 * static_cast<int>(max_row_label);
  const int top = 16 + 7 * static_cast<int>(max_col_label);
  const int grid_w = cell * static_cast<int>(matrix.cols);
  const int grid_h = cell * static_cast<int>(matrix.rows);
  const int legend_x = left + grid_w + 24;
  const int legend_h = std::max(grid_h, 120);
  const int width = legend_x + 64;
  const int height = top + std::max(grid_h, legend_h) + 16;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" font-family=\"monospace\" font-size=\"11\">\n";
  svg += "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"6\" height=\"6\" fill=\"#ffffff\"/>"
         "<path d=\"M0,6 L6,0\" stroke=\"#999999\" stroke-width=\"1\"/></pattern></defs>\n";
  svg += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";

  for (std::size_t c = 0; c < matrix.cols; ++c) {
    const int x = left + static_cast<int>(c) * cell + cell * 2 / 3;
    const int y = top - 6;
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" transform=\"rotate(-90 " + std::to_string(x) + " " + std::to_string(y) +
           ")\">" + matrix.col_labels[c] + "</text>\n";
  }
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    svg += "<text x=\"" + std::to_string(left - 6) + "\" y=\"" +
           std::to_string(top + static_cast<int>(r) * cell + cell * 2 / 3) +
           "\" text-anchor=\"end\">" + matrix.row_labels[r] + "</text>\n";
  }

  for (std::size_t r = 0; r < matrix.rows; ++r) {
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      const int x = left + static_cast<int>(c) * cell;
      const int y = top + static_cast<int>(r) * cell;
      std::string fill = "url(#hatch)";
      std::string title = "missing";
      if (matrix.at(r, c).has_value()) {
        const Rgb color = heatmap_color(*matrix.at(r, c));
        fill = "rgb(" + std::to_string(color.r) + "," + std::to_string(color.g) + "," +
               std::to_string(color.b) + ")";
        title = format_double_12g(*matrix.at(r, c));
      }
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
             "\" fill=\"" + fill + "\" stroke=\"#c8c8c8\" stroke-width=\"0.5\"><title>" +
             matrix.row_labels[r] + " x " + matrix.col_labels[c] + " = " + title +
             "</title></rect>\n";
    }
  }

  // legend: full [-1, 1] scale, dark at both ends, white at zero
  const int steps = 64;
  for (int i = 0; i < steps; ++i) {
    const double value = 1.0 - 2.0 * i / (steps - 1);
    const Rgb color = heatmap_color(value);
    const int y0 = top + i * legend_h / steps;
    const int y1 = top + (i + 1) * legend_h / steps;
    svg += "<rect x=\"" + std::to_string(legend_x) + "\" y=\"" + std::to_string(y0) +
           "\" width=\"14\" height=\"" + std::to_string(y1 - y0 + 1) + "\" fill=\"rgb(" +
           std::to_string(color.r) + "," + std::to_string(color.g) + "," +
           std::to_string(color.b) + ")\"/>\n";
  }
  const char* ticks[] = {"1", "0", "-1"};
  for (int i = 0; i < 3; ++i) {
    const int y = top + i * legend_h / 2 + 4;
    svg += "<text x=\"" + std::to_string(legend_x + 18) + "\" y=\"" + std::to_string(y) +
           "\">" + ticks[i] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void render_heatmap(const CorrelationMatrix& matrix, const std::filesystem::path& path) {
  atomic_write_file(path, render_heatmap_svg(matrix));
}

std::string report_to_json(const AnalysisReport& report) {
  if (report.summaries.empty()) raise(ErrorCode::kEmptyReport, "report holds no summaries");
  check_unique_rows(report);

  std::string out = "{\"matrices\":[";
  std::vector<std::size_t> order(report.matrices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.matrices[a].first < report.matrices[b].first;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ',';
    out += matrix_json(report.matrices[order[i]].first, report.matrices[order[i]].second);
  }
  out += "],\"provenance\":{\"config\":" + run_config_json(report.provenance.config) +
         ",\"manifest_digest\":" + json_string(report.provenance.manifest_digest) +
         ",\"tool_version\":" + json_string(report.provenance.tool_version) + "},\"summaries\":[";
  const auto rows = ordered_summaries(report);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ',';
    out += summary_to_json(*rows[i]);
  }
  out += "]}\n";
  return out;
}

void write_report_json(const AnalysisReport& report, const std::filesystem::path& path) {
  atomic_write_file(path, report_to_json(report));
}

}  // namespace cepstra
