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

#include "cepstra/audio.hpp"

#include <cmath>

#include "cepstra/error.hpp"

namespace cepstra {

void validate_clip(const AudioClip& clip) {
  if (clip.samples.empty()) raise(ErrorCode::kEmptyAudio, "clip holds no samples");
  if (clip.sample_rate_hz <= 0) {
    raise(ErrorCode::kBadConfig, "sample rate must be positive");
  }
  for (double s : clip.samples) {
    if (!std::isfinite(s)) {
      raise(ErrorCode::kCorruptHeader, "clip contains non-finite samples");
    }
  }
}

}  // namespace cepstra
