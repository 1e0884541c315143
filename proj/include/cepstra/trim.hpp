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

#include <cstddef>
#include <span>

#include "cepstra/audio.hpp"

namespace cepstra {

/// Windowed RMS gate used to isolate the captured sound event from leading and
/// trailing silence.
struct TrimConfig {
  double window_ms = 20.0;
  double threshold_dbfs = -40.0;
};

/// Half-open sample span [begin, end) into the clip it was computed from.
struct TrimSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// RMS of the span expressed in dBFS. The RMS is floored at 1e-10 before the
/// log, so pure digital silence maps to -200 dBFS instead of -inf.
double rms_dbfs(std::span<const double> samples);

/// Partitions the clip into consecutive non-overlapping windows of
/// cfg.window_ms (the final window may be partial) and returns the span from
/// the start of the first window whose RMS exceeds cfg.threshold_dbfs to the
/// end of the last such window. Interior windows are never removed.
///
/// Errors: AllSilent when no window exceeds the threshold; BadConfig when the
/// window converts to zero samples or the config is invalid.
TrimSpan find_active_span(const AudioClip& clip, const TrimConfig& cfg);

/// Copies the active span out of the clip. Idempotent: re-trimming the output
/// returns it unchanged.
AudioClip trim_silence(const AudioClip& clip, const TrimConfig& cfg);

}  // namespace cepstra
