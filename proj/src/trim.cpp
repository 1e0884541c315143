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

#include "cepstra/trim.hpp"

#include <cmath>

#include "cepstra/error.hpp"

namespace cepstra {

double rms_dbfs(std::span<const double> samples) {
  double sum_sq = 0.0;
  for (double s : samples) sum_sq += s * s;
  double rms = samples.empty() ? 0.0 : std::sqrt(sum_sq / samples.size());
  if (rms < 1e-10) rms = 1e-10;
  return 20.0 * std::log10(rms);
}

TrimSpan find_active_span(const AudioClip& clip, const TrimConfig& cfg) {
  validate_clip(clip);
  if (cfg.window_ms <= 0.0) raise(ErrorCode::kBadConfig, "window_ms must be positive");
  if (cfg.threshold_dbfs >= 0.0) {
    raise(ErrorCode::kBadConfig, "threshold_dbfs must be negative");
  }
  const auto window = static_cast<std::size_t>(
      std::llround(cfg.window_ms * clip.sample_rate_hz / 1000.0));
  if (window == 0) {
    raise(ErrorCode::kBadConfig, "window shorter than one sample at this rate");
  }

  const std::size_t n = clip.samples.size();
  std::size_t first_active = n;
  std::size_t last_active_end = 0;
  for (std::size_t start = 0; start < n; start += window) {
    const std::size_t end = std::min(start + window, n);
    const std::span<const double> win(clip.samples.data() + start, end - start);
    if (rms_dbfs(win) > cfg.threshold_dbfs) {
      if (first_active == n) first_active = start;
      last_active_end = end;
    }
  }
  if (first_active == n) {
    raise(ErrorCode::kAllSilent, "no window exceeds the silence threshold");
  }
  return {first_active, last_active_end};
}

AudioClip trim_silence(const AudioClip& clip, const TrimConfig& cfg) {
  const TrimSpan span = find_active_span(clip, cfg);
  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.samples.assign(clip.samples.begin() + static_cast<std::ptrdiff_t>(span.begin),
                     clip.samples.begin() + static_cast<std::ptrdiff_t>(span.end));
  return out;
}

}  // namespace cepstra
