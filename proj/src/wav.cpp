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

#include "cepstra/wav.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"

namespace cepstra {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

bool tag_is(const std::uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits_per_sample = 0;
};

double decode_sample(const std::uint8_t* p, std::uint16_t format,
                     std::uint16_t bits) {
  if (format == kFormatPcm && bits == 16) {
    const auto v = static_cast<std::int16_t>(read_u16(p));
    return static_cast<double>(v) / 32768.0;
  }
  if (format == kFormatPcm && bits == 24) {
    std::int32_t v = static_cast<std::int32_t>(p[0]) |
                     (static_cast<std::int32_t>(p[1]) << 8) |
                     (static_cast<std::int32_t>(p[2]) << 16);
    if (v & 0x800000) v -= 0x1000000;  // sign-extend 24 -> 32
    return static_cast<double>(v) / 8388608.0;
  }
  // format 3, 32-bit float
  const float f = std::bit_cast<float>(read_u32(p));
  return static_cast<double>(f);
}

}  // namespace

AudioClip decode_wav(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") ||
      !tag_is(bytes.data() + 8, "WAVE")) {
    raise(ErrorCode::kCorruptHeader, "not a RIFF/WAVE file");
  }

  FmtChunk fmt;
  bool fmt_found = false;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;
  bool data_found = false;

  std::size_t offset = 12;
  while (offset + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + offset;
    const std::uint32_t chunk_size = read_u32(chunk + 4);
    const std::size_t body = offset + 8;
    if (body + chunk_size > bytes.size()) {
      raise(ErrorCode::kCorruptHeader, "chunk extends past end of file");
    }
    if (tag_is(chunk, "fmt ")) {
      if (chunk_size < 16) raise(ErrorCode::kCorruptHeader, "fmt chunk too small");
      fmt.format = read_u16(bytes.data() + body);
      fmt.channels = read_u16(bytes.data() + body + 2);
      fmt.sample_rate = read_u32(bytes.data() + body + 4);
      fmt.block_align = read_u16(bytes.data() + body + 12);
      fmt.bits_per_sample = read_u16(bytes.data() + body + 14);
      fmt_found = true;
    } else if (tag_is(chunk, "data") && !data_found) {
      data_offset = body;
      data_size = chunk_size;
      data_found = true;
    }
    offset = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!fmt_found) raise(ErrorCode::kCorruptHeader, "missing fmt chunk");
  if (!data_found) raise(ErrorCode::kCorruptHeader, "missing data chunk");

  const bool pcm_ok = fmt.format == kFormatPcm &&
                      (fmt.bits_per_sample == 16 || fmt.bits_per_sample == 24);
  const bool float_ok = fmt.format == kFormatIeeeFloat && fmt.bits_per_sample == 32;
  if (!pcm_ok && !float_ok) {
    raise(ErrorCode::kUnsupportedEncoding,
          "format code " + std::to_string(fmt.format) + " at " +
              std::to_string(fmt.bits_per_sample) + " bits");
  }
  if (fmt.channels != 1 && fmt.channels != 2) {
    raise(ErrorCode::kUnsupportedEncoding,
          std::to_string(fmt.channels) + " channels");
  }
  if (fmt.sample_rate == 0) raise(ErrorCode::kCorruptHeader, "zero sample rate");

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8u;
  const std::size_t frame_size = bytes_per_sample * fmt.channels;
  if (fmt.block_align != 0 && fmt.block_align != frame_size) {
    raise(ErrorCode::kCorruptHeader, "block align inconsistent with format");
  }
  if (data_size % frame_size != 0) {
    raise(ErrorCode::kCorruptHeader, "data size not a multiple of frame size");
  }

  const std::size_t num_frames = data_size / frame_size;
  if (num_frames == 0) raise(ErrorCode::kEmptyAudio, "data chunk holds no samples");

  AudioClip clip;
  clip.sample_rate_hz = static_cast<int>(fmt.sample_rate);
  clip.samples.resize(num_frames);
  const std::uint8_t* src = bytes.data() + data_offset;
  for (std::size_t i = 0; i < num_frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < fmt.channels; ++c) {
      acc += decode_sample(src + i * frame_size + c * bytes_per_sample,
                           fmt.format, fmt.bits_per_sample);
    }
    const double v = acc / fmt.channels;
    if (!std::isfinite(v)) {
      raise(ErrorCode::kCorruptHeader, "non-finite sample value in data chunk");
    }
    clip.samples[i] = v;
  }
  return clip;
}

AudioClip load_wav(const std::filesystem::path& path) {
  return decode_wav(read_file_bytes(path));
}

std::vector<std::uint8_t> encode_wav_pcm16(const AudioClip& clip) {
  validate_clip(clip);
  const std::size_t data_size = clip.samples.size() * 2;
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);

  auto push_u16 = [&out](std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  };
  auto push_u32 = [&out](std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
  };
  auto push_tag = [&out](const char* tag) {
    out.insert(out.end(), tag, tag + 4);
  };

  const auto rate = static_cast<std::uint32_t>(clip.sample_rate_hz);
  push_tag("RIFF");
  push_u32(static_cast<std::uint32_t>(36 + data_size));
  push_tag("WAVE");
  push_tag("fmt ");
  push_u32(16);
  push_u16(kFormatPcm);
  push_u16(1);  // mono
  push_u32(rate);
  push_u32(rate * 2);  // byte rate
  push_u16(2);         // block align
  push_u16(16);
  push_tag("data");
  push_u32(static_cast<std::uint32_t>(data_size));

  for (double s : clip.samples) {
    long q = std::lround(s * 32768.0);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    push_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

void write_wav_pcm16(const std::filesystem::path& path, const AudioClip& clip) {
  const auto bytes = encode_wav_pcm16(clip);
  atomic_write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                           bytes.size()));
}

}  // namespace cepstra
