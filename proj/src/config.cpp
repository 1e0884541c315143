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

#include "cepstra/config.hpp"

#include <json.hpp>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"

namespace cepstra {

void RunConfig::validate() const {
  mfcc.validate();
  if (trim.window_ms <= 0.0) raise(ErrorCode::kBadConfig, "trim.window_ms must be positive");
  if (trim.threshold_dbfs >= 0.0) {
    raise(ErrorCode::kBadConfig, "trim.threshold_dbfs must be negative");
  }
  if (output_dir.empty()) raise(ErrorCode::kBadConfig, "output_dir must be set");
}

RunConfig load_run_config(const std::filesystem::path& path) {
  RunConfig config;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file_text(path));
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kBadConfig, std::string("malformed config: ") + e.what());
  }
  try {
    if (j.contains("mfcc")) {
      const auto& m = j["mfcc"];
      if (m.contains("pre_emphasis_a")) config.mfcc.pre_emphasis_a = m["pre_emphasis_a"].get<double>();
      if (m.contains("frame_len_samples")) config.mfcc.frame_len_samples = m["frame_len_samples"].get<int>();
      if (m.contains("hop_samples")) config.mfcc.hop_samples = m["hop_samples"].get<int>();
      if (m.contains("num_filters")) config.mfcc.num_filters = m["num_filters"].get<int>();
      if (m.contains("num_coeffs")) config.mfcc.num_coeffs = m["num_coeffs"].get<int>();
      if (m.contains("keep_coeffs")) config.mfcc.keep_coeffs = m["keep_coeffs"].get<int>();
      if (m.contains("log_floor")) config.mfcc.log_floor = m["log_floor"].get<double>();
    }
    if (j.contains("trim")) {
      const auto& t = j["trim"];
      if (t.contains("window_ms")) config.trim.window_ms = t["window_ms"].get<double>();
      if (t.contains("threshold_dbfs")) config.trim.threshold_dbfs = t["threshold_dbfs"].get<double>();
    }
    if (j.contains("mode")) config.mode = parse_vector_mode(j["mode"].get<std::string>());
    if (j.contains("output_dir")) config.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint32_t>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kBadConfig, std::string("bad config value: ") + e.what());
  }
  config.validate();
  return config;
}

}  // namespace cepstra
