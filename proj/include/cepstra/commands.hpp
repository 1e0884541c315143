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
#include <optional>
#include <ostream>

#include "cepstra/config.hpp"
#include "cepstra/report.hpp"

namespace cepstra {

/// Batch commands behind the CLI. Every command is deterministic given
/// (manifest, config, seed); the worker count never changes an output byte.
/// Per-file failures are collected and summarized, not fatal; the return
/// value is the process exit code (nonzero iff something failed).
///
/// Outputs land under config.output_dir:
///   trim   -> trimmed/<label>.wav + trimmed/manifest.csv
///   mfcc   -> features/<label>.{csv,json}
///   corr   -> corr/<a>_vs_<b>_<kind>.{csv,svg} + _summary.json
///   report -> report/report.{txt,json} + per-matrix csv/svg
///   synth  -> synth/<label>.wav + synth/manifest.csv

int cmd_trim(const std::filesystem::path& manifest_path, const RunConfig& config,
             std::ostream& out);

/// Writes one feature file per entry. By default the full num_coeffs rows are
/// stored; keep_rows narrows the written matrix when the caller asked for it
/// explicitly (--keep).
int cmd_mfcc(const std::filesystem::path& manifest_path, const RunConfig& config,
             std::optional<int> keep_rows, std::ostream& out);

/// One (cohort pair, kind) analysis: matrix CSV, heatmap and summary JSON.
/// When with_baselines is set, also emits raw-sample and mean-spectrum
/// Pearson baselines plus per-recording waveform CSV dumps.
int cmd_corr(const std::filesystem::path& manifest_path, const RunConfig& config,
             Cohort cohort_a, Cohort cohort_b, SoundKind kind, bool with_baselines,
             std::ostream& out);

/// All six analyses (cross-cohort and within-covid for each kind), table plus
/// canonical JSON. Analyses whose selection is empty are skipped with a
/// warning row count drop, mirroring partial corpora.
int cmd_report(const std::filesystem::path& manifest_path, const RunConfig& config,
               std::ostream& out);

int cmd_synth(const RunConfig& config, std::ostream& out);

/// The report-building core of cmd_report, exposed so tests can inspect the
/// assembled matrices and summaries. failures counts analyses that could not
/// run (missing features); warnings go to `out` when provided.
AnalysisReport build_report(const std::filesystem::path& manifest_path,
                            const RunConfig& config, std::ostream* out,
                            int* failures);

}  // namespace cepstra
