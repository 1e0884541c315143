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

#include <vector>

namespace cepstra {

/// Mono sample sequence plus its native rate. Samples are dimensionless,
/// nominally in [-1, 1]; no resampling happens anywhere in the pipeline, all
/// per-sample parameters are interpreted at sample_rate_hz.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  double duration_seconds() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

/// Checks the clip invariants (non-empty, finite samples, positive rate);
/// throws EmptyAudio / CorruptHeader / BadConfig accordingly.
void validate_clip(const AudioClip& clip);

}  // namespace cepstra
