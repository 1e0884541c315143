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
#include <vector>

#include "cepstra/audio.hpp"
#include "cepstra/manifest.hpp"

namespace cepstra {

/// Synthetic two-cohort corpus: each cohort is a family of harmonic stacks
/// with a cohort-specific fundamental and spectral tilt, one recording per
/// subject per kind, padded with silence and fully seed-deterministic.
struct SynthConfig {
  int subjects_per_cohort = 7;
  int sample_rate_hz = 8000;
  double body_seconds = 1.0;
  double pad_seconds = 0.15;
  std::uint32_t seed = 42;
};

/// One deterministic recording; subject_index runs 0..subjects_per_cohort-1.
AudioClip synth_recording(const SynthConfig& cfg, Cohort cohort, SoundKind kind,
                          int subject_index);

/// Writes all WAVs plus a manifest.csv into `dir` and returns the manifest
/// path. Identical configs produce byte-identical corpora.
std::filesystem::path generate_corpus(const SynthConfig& cfg,
                                      const std::filesystem::path& dir);

}  // namespace cepstra
