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

#include <doctest.h>

#include <string>

#include "cepstra/error.hpp"
#include "cepstra/report.hpp"
#include "support.hpp"

using namespace cepstra;

namespace {

SimilaritySummary make_summary(Cohort a, Cohort b, SoundKind kind, double average,
                               double variance, std::size_t count) {
  SimilaritySummary s;
  s.cohort_a = a;
  s.cohort_b = b;
  s.kind = kind;
  s.average = average;
  s.variance = variance;
  s.strength = classify_strength(average);
  s.count = count;
  return s;
}

CorrelationMatrix single_cell(double value) {
  CorrelationMatrix m;
  m.rows = m.cols = 1;
  m.row_labels = m.col_labels = {"a_cough_1"};
  m.entries = {value};
  return m;
}

AnalysisReport sample_report() {
  AnalysisReport report;
  report.summaries.push_back(
      make_summary(Cohort::kHealthy, Cohort::kCovid, SoundKind::kCough, 0.42, 0.08, 49));
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kVoice, 0.82, 0.02, 21));
  report.matrices.emplace_back("healthy_vs_covid_cough", single_cell(0.42));
  report.provenance.manifest_digest = "0123456789abcdef";
  return report;
}

}  // namespace

TEST_CASE("table rows reproduce the published format") {
  const std::string table = render_table(sample_report());
  CHECK(table.find("Covid-19 vs Covid-19 | Voice | 0.82 | 0.02 | High positive correlation\n") !=
        std::string::npos);
  CHECK(table.find("Non-Covid-19 vs Covid-19 | Cough | 0.42 | 0.08 | Low positive correlation\n") !=
        std::string::npos);
  // cross-cohort rows precede within-cohort rows
  CHECK(table.find("Non-Covid-19 vs Covid-19") < table.find("Covid-19 vs Covid-19 |"));
}

TEST_CASE("table rounding is half away from zero at two decimals") {
  AnalysisReport report;
  report.summaries.push_back(
      make_summary(Cohort::kHealthy, Cohort::kCovid, SoundKind::kCough, 0.425, 0.004999, 4));
  const std::string table = render_table(report);
  CHECK(table.find(" 0.43 ") != std::string::npos);
  CHECK(table.find(" 0.00 ") != std::string::npos);
}

TEST_CASE("kinds render in cough, breath, voice order") {
  AnalysisReport report;
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kVoice, 0.82, 0.02, 21));
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kCough, 0.65, 0.07, 21));
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kBreath, 0.58, 0.1, 21));
  const std::string table = render_table(report);
  CHECK(table.find("Cough") < table.find("Breath"));
  CHECK(table.find("Breath") < table.find("Voice"));
}

TEST_CASE("empty report is rejected") {
  AnalysisReport report;
  CHECK_THROWS_AS(render_table(report), Error);
  CHECK_THROWS_AS(report_to_json(report), Error);
}

TEST_CASE("heatmap colors map 0 to white and 1 to the darkest cell") {
  CHECK(heatmap_color(0.0) == Rgb{255, 255, 255});
  CHECK(heatmap_color(1.0) == Rgb{8, 48, 107});
  CHECK(heatmap_color(-1.0) == Rgb{103, 0, 31});
  // dark = strong: larger magnitude never renders lighter
  double prev_pos = 1e9, prev_neg = 1e9;
  for (double r = 0.0; r <= 1.0; r += 0.01) {
    const double lum_pos = heatmap_color(r).luminance();
    const double lum_neg = heatmap_color(-r).luminance();
    CHECK(lum_pos <= prev_pos);
    CHECK(lum_neg <= prev_neg);
    prev_pos = lum_pos;
    prev_neg = lum_neg;
  }
  CHECK(heatmap_color(0.79).luminance() < heatmap_color(0.42).luminance());
  CHECK_THROWS_AS(heatmap_color(1.5), Error);
}

TEST_CASE("heatmap SVG endpoints and hatching") {
  const std::string dark = render_heatmap_svg(single_cell(1.0));
  CHECK(dark.find("fill=\"rgb(8,48,107)\"") != std::string::npos);
  CHECK(dark.find("<svg xmlns=") != std::string::npos);

  const std::string white = render_heatmap_svg(single_cell(0.0));
  CHECK(white.find("fill=\"rgb(255,255,255)\"") != std::string::npos);

  CorrelationMatrix with_missing;
  with_missing.rows = 1;
  with_missing.cols = 2;
  with_missing.row_labels = {"r"};
  with_missing.col_labels = {"c1", "c2"};
  with_missing.entries = {0.5, std::nullopt};
  const std::string svg = render_heatmap_svg(with_missing);
  CHECK(svg.find("url(#hatch)") != std::string::npos);
  CHECK(svg.find("r</text>") != std::string::npos);  // axis labels present
}

TEST_CASE("rendering is pure: identical inputs give identical bytes") {
  testsupport::TempDir dir;
  const AnalysisReport report = sample_report();
  CHECK(report_to_json(report) == report_to_json(report));
  CHECK(render_heatmap_svg(single_cell(0.7)) == render_heatmap_svg(single_cell(0.7)));

  write_report_json(report, dir.file("a.json"));
  write_report_json(report, dir.file("b.json"));
  CHECK(testsupport::read_bytes(dir.file("a.json")) ==
        testsupport::read_bytes(dir.file("b.json")));
}

TEST_CASE("report JSON is canonical and complete") {
  AnalysisReport report;
  const Cohort pairs[][2] = {{Cohort::kHealthy, Cohort::kCovid},
                             {Cohort::kCovid, Cohort::kCovid}};
  for (const auto& pair : pairs) {
    for (SoundKind kind : {SoundKind::kCough, SoundKind::kBreath, SoundKind::kVoice}) {
      report.summaries.push_back(make_summary(pair[0], pair[1], kind, 0.5, 0.01, 9));
    }
  }
  const std::string json = report_to_json(report);
  // six summary objects
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = json.find("\"strength\"", pos)) != std::string::npos; ++pos) {
    ++count;
  }
  CHECK(count == 6);
  // keys emitted in sorted order
  CHECK(json.find("\"matrices\"") < json.find("\"provenance\""));
  CHECK(json.find("\"provenance\"") < json.find("\"summaries\""));
  CHECK(json.find("\"average\"") < json.find("\"count\""));
  // full precision values, not table rounding
  AnalysisReport precise;
  precise.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kCough, 0.123456789012, 0.0, 1));
  CHECK(report_to_json(precise).find("0.123456789012") != std::string::npos);
}

TEST_CASE("summary JSON carries pair, kind, strength and count") {
  const auto s = make_summary(Cohort::kHealthy, Cohort::kCovid, SoundKind::kVoice, 0.79,
                              0.02, 49);
  const std::string json = summary_to_json(s);
  CHECK(json == "{\"average\":0.79,\"count\":49,\"kind\":\"voice\",\"pair\":"
                "[\"healthy\",\"covid\"],\"strength\":\"High positive correlation\","
                "\"variance\":0.02}");
}

TEST_CASE("duplicate (pair, kind) rows are rejected") {
  AnalysisReport report;
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kCough, 0.5, 0.0, 1));
  report.summaries.push_back(
      make_summary(Cohort::kCovid, Cohort::kCovid, SoundKind::kCough, 0.6, 0.0, 1));
  CHECK_THROWS_AS(render_table(report), Error);
}
