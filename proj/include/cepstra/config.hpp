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

#include <cstdint>
#include <filesystem>

#include "cepstra/correlation.hpp"
#include "cepstra/mfcc.hpp"
#include "cepstra/trim.hpp"

namespace cepstra {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One declarative document driving a whole batch run; checked into runs for
/// provenance. CLI flags override fields one-for-one. `jobs` is a runtime
/// knob only and never reaches provenance or output bytes.
struct RunConfig {
  MfccConfig mfcc;
  TrimConfig trim;
  VectorMode mode = VectorMode::kFlattenTruncated;
  std::filesystem::path output_dir = "out";
  std::uint32_t seed = 42;  // synthetic-corpus generation only
  int jobs = 1;

  void validate() const;
};

/// Reads a JSON config file; absent fields keep their defaults.
/// Errors: FileNotFound, BadConfig (malformed document or bad values).
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace cepstra
