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

namespace cepstra {

/// Decodes a RIFF/WAVE file into a mono clip.
///
/// Accepted encodings: PCM 16-bit, PCM 24-bit (format code 1) and IEEE float
/// 32-bit (format code 3), 1 or 2 channels. Stereo is downmixed by per-sample
/// channel mean. Integer samples are normalized by the type's maximum
/// magnitude (32768 for 16-bit, 8388608 for 24-bit), so INT_MIN maps to -1.0.
///
/// Errors: FileNotFound, UnsupportedEncoding (any other codec or channel
/// count), CorruptHeader (inconsistent chunk structure or non-finite float
/// samples), EmptyAudio (a data chunk with zero frames).
AudioClip load_wav(const std::filesystem::path& path);

/// Same decoder over an in-memory buffer.
AudioClip decode_wav(const std::vector<std::uint8_t>& bytes);

/// Encodes the clip as mono 16-bit PCM (round half away from zero, clamped to
/// the int16 range). Quantization error is bounded by 1/32768 per sample.
std::vector<std::uint8_t> encode_wav_pcm16(const AudioClip& clip);

/// encode_wav_pcm16 + atomic file write.
void write_wav_pcm16(const std::filesystem::path& path, const AudioClip& clip);

}  // namespace cepstra
