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

#include "cepstra/commands.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cepstra/error.hpp"
#include "cepstra/log.hpp"
#include "cepstra/manifest.hpp"
#include "cepstra/synth.hpp"
#include "cepstra/trim.hpp"
#include "cepstra/util.hpp"
#include "cepstra/wav.hpp"

namespace cepstra {
namespace {

struct EntryOutcome {
  std::string line;
  bool failed = false;
};

int flush_outcomes(const std::vector<EntryOutcome>& outcomes, std::ostream& out) {
  int failures = 0;
  for (const auto& o : outcomes) {
    out << o.line << '\n';
    if (o.failed) ++failures;
  }
  if (failures > 0) {
    out << failures << " of " << outcomes.size() << " recordings failed\n";
  }
  return failures > 0 ? 1 : 0;
}

std::filesystem::path features_dir(const RunConfig& config) {
  return config.output_dir / "features";
}

LabeledFeatures load_features(const RunConfig& config, const RecordingEntry& entry) {
  const std::string label = recording_label(entry);
  const std::filesystem::path path = features_dir(config) / (label + ".json");
  MfccMatrix features = mfcc_from_json(read_file_text(path));
  return {label, select_coeffs(features, config.mfcc.keep_coeffs)};
}

std::vector<RecordingEntry> select_entries(const std::vector<RecordingEntry>& entries,
                                           Cohort cohort, SoundKind kind) {
  std::vector<RecordingEntry> out;
  for (const auto& e : entries) {
    if (e.cohort == cohort && e.kind == kind) out.push_back(e);
  }
  return out;
}

std::string analysis_name(Cohort a, Cohort b, SoundKind kind) {
  return std::string(cohort_name(a)) + "_vs_" + std::string(cohort_name(b)) + "_" +
         std::string(kind_name(kind));
}

std::string manifest_digest(const std::filesystem::path& manifest_path) {
  const auto bytes = read_file_bytes(manifest_path);
  return hex_digest(fnv1a64(bytes.data(), bytes.size()));
}

}  // namespace

int cmd_trim(const std::filesystem::path& manifest_path, const RunConfig& config,
             std::ostream& out) {
  config.validate();
  const std::vector<RecordingEntry> entries = load_manifest(manifest_path);
  const std::filesystem::path dir = config.output_dir / "trimmed";
  std::filesystem::create_directories(dir);

  std::vector<EntryOutcome> outcomes(entries.size());
  std::vector<std::optional<RecordingEntry>> trimmed_entries(entries.size());
  parallel_for(entries.size(), config.jobs, [&](std::size_t i) {
    const RecordingEntry& entry = entries[i];
    const std::string label = recording_label(entry);
    try {
      const AudioClip clip = load_wav(entry.path);
      const TrimSpan span = find_active_span(clip, config.trim);
      AudioClip kept;
      kept.sample_rate_hz = clip.sample_rate_hz;
      kept.samples.assign(clip.samples.begin() + static_cast<std::ptrdiff_t>(span.begin),
                          clip.samples.begin() + static_cast<std::ptrdiff_t>(span.end));
      RecordingEntry moved = entry;
      moved.path = dir / (label + ".wav");
      write_wav_pcm16(moved.path, kept);

      const std::size_t removed = clip.samples.size() - kept.samples.size();
      outcomes[i].line = label + ": removed " + std::to_string(removed) +
                         " samples (leading " + std::to_string(span.begin) +
                         ", trailing " +
                         std::to_string(clip.samples.size() - span.end) + ")";
      trimmed_entries[i] = std::move(moved);
    } catch (const std::exception& e) {
      outcomes[i] = {label + ": FAILED: " + e.what(), true};
    }
  });

  std::vector<RecordingEntry> kept_entries;
  for (auto& e : trimmed_entries) {
    if (e.has_value()) kept_entries.push_back(std::move(*e));
  }
  if (!kept_entries.empty()) {
    write_manifest(dir / "manifest.csv", kept_entries);
  }
  return flush_outcomes(outcomes, out);
}

int cmd_mfcc(const std::filesystem::path& manifest_path, const RunConfig& config,
             std::optional<int> keep_rows, std::ostream& out) {
  config.validate();
  const std::vector<RecordingEntry> entries = load_manifest(manifest_path);
  const std::filesystem::path dir = features_dir(config);
  std::filesystem::create_directories(dir);

  std::vector<EntryOutcome> outcomes(entries.size());
  parallel_for(entries.size(), config.jobs, [&](std::size_t i) {
    const RecordingEntry& entry = entries[i];
    const std::string label = recording_label(entry);
    try {
      const AudioClip clip = load_wav(entry.path);
      MfccMatrix features = extract_mfcc(clip, config.mfcc);
      if (keep_rows.has_value()) features = select_coeffs(features, *keep_rows);
      atomic_write_file(dir / (label + ".json"), mfcc_to_json(features));
      atomic_write_file(dir / (label + ".csv"), mfcc_to_csv(features));
      outcomes[i].line = label + ": " + std::to_string(features.num_coeffs) + " x " +
                         std::to_string(features.num_frames) + " coefficients";
    } catch (const std::exception& e) {
      outcomes[i] = {label + ": FAILED: " + e.what(), true};
    }
  });
  return flush_outcomes(outcomes, out);
}

int cmd_corr(const std::filesystem::path& manifest_path, const RunConfig& config,
             Cohort cohort_a, Cohort cohort_b, SoundKind kind, bool with_baselines,
             std::ostream& out) {
  config.validate();
  const std::vector<RecordingEntry> entries = load_manifest(manifest_path);
  const std::vector<RecordingEntry> group_a = select_entries(entries, cohort_a, kind);
  const std::vector<RecordingEntry> group_b = select_entries(entries, cohort_b, kind);
  if (group_a.empty() || group_b.empty()) {
    raise(ErrorCode::kEmptyGroup,
          "no recordings match " + analysis_name(cohort_a, cohort_b, kind));
  }

  std::vector<LabeledFeatures> features_a, features_b;
  for (const auto& e : group_a) features_a.push_back(load_features(config, e));
  const bool within = cohort_a == cohort_b;
  if (!within) {
    for (const auto& e : group_b) features_b.push_back(load_features(config, e));
  }

  const CorrelationMatrix matrix =
      within ? correlation_matrix(features_a, config.mode, config.jobs)
             : correlation_matrix(features_a, features_b, config.mode, config.jobs);

  const std::filesystem::path dir = config.output_dir / "corr";
  std::filesystem::create_directories(dir);
  const std::string name = analysis_name(cohort_a, cohort_b, kind);
  atomic_write_file(dir / (name + ".csv"), correlation_matrix_to_csv(matrix));
  render_heatmap(matrix, dir / (name + ".svg"));

  // a 1 x 1 within-group selection has no off-diagonal entries to aggregate;
  // the matrix and heatmap still stand on their own
  std::optional<SimilaritySummary> summary;
  try {
    summary = summarize(matrix, cohort_a, cohort_b, kind);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoEntries) throw;
    out << "warning: " << name << " has no aggregatable entries, summary skipped\n";
  }
  if (summary.has_value()) {
    atomic_write_file(dir / (name + "_summary.json"), summary_to_json(*summary) + "\n");
  }

  if (with_baselines) {
    // raw-signal comparison: Pearson over samples and over mean power spectra
    const std::vector<RecordingEntry>& rows = group_a;
    const std::vector<RecordingEntry>& cols = within ? group_a : group_b;
    std::string csv = "a,b,waveform_r,spectrum_r\n";
    std::vector<AudioClip> row_clips, col_clips;
    for (const auto& e : rows) row_clips.push_back(load_wav(e.path));
    for (const auto& e : cols) col_clips.push_back(load_wav(e.path));
    const std::filesystem::path series_dir = dir / "series";
    std::filesystem::create_directories(series_dir);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string dump = "index,value\n";
      for (std::size_t n = 0; n < row_clips[i].samples.size(); ++n) {
        dump += std::to_string(n) + "," + format_double(row_clips[i].samples[n]) + "\n";
      }
      atomic_write_file(series_dir / (recording_label(rows[i]) + ".csv"), dump);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        csv += recording_label(rows[i]) + "," + recording_label(cols[j]) + "," +
               format_double(waveform_correlation(row_clips[i], col_clips[j])) + "," +
               format_double(spectrum_correlation(row_clips[i], col_clips[j],
                                                  config.mfcc.frame_len_samples)) +
               "\n";
      }
    }
    atomic_write_file(dir / (name + "_baseline.csv"), csv);
  }

  out << name << ": " << matrix.rows << " x " << matrix.cols << " matrix";
  if (summary.has_value()) {
    out << ", average " << format_fixed(summary->average, 2) << " ("
        << strength_label_text(summary->strength) << ")";
  }
  out << '\n';
  return 0;
}

AnalysisReport build_report(const std::filesystem::path& manifest_path,
                            const RunConfig& config, std::ostream* out,
                            int* failures) {
  config.validate();
  const std::vector<RecordingEntry> entries = load_manifest(manifest_path);

  AnalysisReport report;
  report.provenance.config = config;
  report.provenance.manifest_digest = manifest_digest(manifest_path);

  const std::pair<Cohort, Cohort> pairs[] = {
      {Cohort::kHealthy, Cohort::kCovid},
      {Cohort::kCovid, Cohort::kCovid},
  };
  const SoundKind kinds[] = {SoundKind::kCough, SoundKind::kBreath, SoundKind::kVoice};

  for (const auto& [cohort_a, cohort_b] : pairs) {
    for (SoundKind kind : kinds) {
      const std::string name = analysis_name(cohort_a, cohort_b, kind);
      const std::vector<RecordingEntry> group_a = select_entries(entries, cohort_a, kind);
      const std::vector<RecordingEntry> group_b = select_entries(entries, cohort_b, kind);
      if (group_a.empty() || group_b.empty()) {
        if (out != nullptr) {
          *out << "warning: skipping " << name << " (no matching recordings)\n";
        }
        continue;
      }
      try {
        std::vector<LabeledFeatures> features_a, features_b;
        for (const auto& e : group_a) features_a.push_back(load_features(config, e));
        const bool within = cohort_a == cohort_b;
        if (!within) {
          for (const auto& e : group_b) features_b.push_back(load_features(config, e));
        }
        CorrelationMatrix matrix =
            within ? correlation_matrix(features_a, config.mode, config.jobs)
                   : correlation_matrix(features_a, features_b, config.mode, config.jobs);
        report.summaries.push_back(summarize(matrix, cohort_a, cohort_b, kind));
        report.matrices.emplace_back(name, std::move(matrix));
      } catch (const std::exception& e) {
        if (failures != nullptr) ++*failures;
        if (out != nullptr) *out << "warning: " << name << " failed: " << e.what() << '\n';
      }
    }
  }
  return report;
}

int cmd_report(const std::filesystem::path& manifest_path, const RunConfig& config,
               std::ostream& out) {
  int failures = 0;
  const AnalysisReport report = build_report(manifest_path, config, &out, &failures);
  if (report.summaries.empty()) {
    raise(ErrorCode::kEmptyReport, "no analysis produced any rows");
  }

  const std::filesystem::path dir = config.output_dir / "report";
  std::filesystem::create_directories(dir);
  const std::string table = render_table(report);
  atomic_write_file(dir / "report.txt", table);
  write_report_json(report, dir / "report.json");
  for (const auto& [name, matrix] : report.matrices) {
    atomic_write_file(dir / (name + ".csv"), correlation_matrix_to_csv(matrix));
    render_heatmap(matrix, dir / (name + ".svg"));
  }
  out << table;
  return failures > 0 ? 1 : 0;
}

int cmd_synth(const RunConfig& config, std::ostream& out) {
  config.validate();
  SynthConfig synth;
  synth.seed = config.seed;
  const std::filesystem::path manifest =
      generate_corpus(synth, config.output_dir / "synth");
  const auto entries = load_manifest(manifest);
  out << "wrote " << entries.size() << " recordings and " << manifest.string() << '\n';
  return 0;
}

}  // namespace cepstra
