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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cepstra/commands.hpp"
#include "cepstra/error.hpp"

namespace {

struct CliOptions {
  std::string manifest;
  std::string config_path;
  std::string out_dir;
  std::string mode;
  std::string pair;
  std::string kind;
  int keep = 0;
  int jobs = 0;
  unsigned seed = 0;
  bool baseline = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts, bool needs_manifest) {
  if (needs_manifest) {
    cmd->add_option("--manifest", opts.manifest, "corpus manifest CSV")->required();
  }
  cmd->add_option("--config", opts.config_path, "JSON run config; flags override fields");
  cmd->add_option("--out", opts.out_dir, "output directory (default: out)");
  cmd->add_option("--jobs", opts.jobs, "worker threads (default: 1)");
}

bool flag_given(const CLI::App& cmd, const std::string& name) {
  const CLI::Option* option = cmd.get_option_no_throw(name);
  return option != nullptr && option->count() > 0;
}

cepstra::RunConfig resolve_config(const CLI::App& cmd, const CliOptions& opts) {
  cepstra::RunConfig config;
  if (!opts.config_path.empty()) config = cepstra::load_run_config(opts.config_path);
  if (flag_given(cmd, "--out")) config.output_dir = opts.out_dir;
  if (flag_given(cmd, "--jobs")) config.jobs = opts.jobs;
  if (flag_given(cmd, "--mode")) config.mode = cepstra::parse_vector_mode(opts.mode);
  if (flag_given(cmd, "--keep")) config.mfcc.keep_coeffs = opts.keep;
  if (flag_given(cmd, "--seed")) config.seed = opts.seed;
  config.validate();
  return config;
}

std::pair<cepstra::Cohort, cepstra::Cohort> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    cepstra::raise(cepstra::ErrorCode::kBadEnumValue,
                   "--pair expects 'cohortA,cohortB', got '" + text + "'");
  }
  return {cepstra::parse_cohort(text.substr(0, comma)),
          cepstra::parse_cohort(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MFCC similarity analysis for short audio recordings"};
  app.require_subcommand(1);

  CliOptions opts;

  CLI::App* trim = app.add_subcommand("trim", "cut leading/trailing silence from a corpus");
  add_common_flags(trim, opts, true);

  CLI::App* mfcc = app.add_subcommand("mfcc", "extract coefficient matrices per recording");
  add_common_flags(mfcc, opts, true);
  mfcc->add_option("--keep", opts.keep, "write only the first K coefficient rows");

  CLI::App* corr = app.add_subcommand("corr", "correlation matrix for one cohort pair and kind");
  add_common_flags(corr, opts, true);
  corr->add_option("--pair", opts.pair, "cohortA,cohortB (covid|healthy)")->required();
  corr->add_option("--kind", opts.kind, "cough|breath|voice")->required();
  corr->add_option("--mode", opts.mode, "flatten_truncated|mean_frame|per_coeff");
  corr->add_option("--keep", opts.keep, "coefficients used for correlation");
  corr->add_flag("--baseline", opts.baseline,
                 "also emit raw waveform/spectrum correlations and series dumps");

  CLI::App* report = app.add_subcommand("report", "full table of all cohort-pair analyses");
  add_common_flags(report, opts, true);
  report->add_option("--mode", opts.mode, "flatten_truncated|mean_frame|per_coeff");
  report->add_option("--keep", opts.keep, "coefficients used for correlation");

  CLI::App* synth = app.add_subcommand("synth", "generate a labeled synthetic corpus");
  add_common_flags(synth, opts, false);
  synth->add_option("--seed", opts.seed, "corpus seed (default: 42)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trim->parsed()) {
      return cepstra::cmd_trim(opts.manifest, resolve_config(*trim, opts), std::cout);
    }
    if (mfcc->parsed()) {
      std::optional<int> keep_rows;
      if (flag_given(*mfcc, "--keep")) keep_rows = opts.keep;
      cepstra::RunConfig config = resolve_config(*mfcc, opts);
      return cepstra::cmd_mfcc(opts.manifest, config, keep_rows, std::cout);
    }
    if (corr->parsed()) {
      const auto [cohort_a, cohort_b] = parse_pair(opts.pair);
      return cepstra::cmd_corr(opts.manifest, resolve_config(*corr, opts), cohort_a,
                               cohort_b, cepstra::parse_kind(opts.kind), opts.baseline,
                               std::cout);
    }
    if (report->parsed()) {
      return cepstra::cmd_report(opts.manifest, resolve_config(*report, opts), std::cout);
    }
    if (synth->parsed()) {
      return cepstra::cmd_synth(resolve_config(*synth, opts), std::cout);
    }
  } catch (const cepstra::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
