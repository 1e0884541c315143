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

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("cepstra_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_bytes(const std::filesystem::path& path,
                        const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

inline std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

// ---- hand-built WAV bytes, independent of the production encoder ----

inline void push_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

inline void push_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

inline std::vector<std::uint8_t> build_wav(std::uint16_t format,
                                           std::uint16_t channels,
                                           std::uint32_t rate, std::uint16_t bits,
                                           const std::vector<std::uint8_t>& payload) {
  std::vector<std::uint8_t> out;
  push_tag(out, "RIFF");
  push_u32(out, static_cast<std::uint32_t>(36 + payload.size()));
  push_tag(out, "WAVE");
  push_tag(out, "fmt ");
  push_u32(out, 16);
  push_u16(out, format);
  push_u16(out, channels);
  push_u32(out, rate);
  push_u32(out, rate * channels * bits / 8);
  push_u16(out, static_cast<std::uint16_t>(channels * bits / 8));
  push_u16(out, bits);
  push_tag(out, "data");
  push_u32(out, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

inline std::vector<std::uint8_t> wav_pcm16(std::uint32_t rate, std::uint16_t channels,
                                           const std::vector<std::int16_t>& samples) {
  std::vector<std::uint8_t> payload;
  for (std::int16_t s : samples) push_u16(payload, static_cast<std::uint16_t>(s));
  return build_wav(1, channels, rate, 16, payload);
}

inline std::vector<std::uint8_t> wav_float32(std::uint32_t rate, std::uint16_t channels,
                                             const std::vector<float>& samples) {
  std::vector<std::uint8_t> payload;
  for (float s : samples) {
    std::uint32_t bits;
    static_assert(sizeof(bits) == sizeof(s));
    std::memcpy(&bits, &s, sizeof(bits));
    push_u32(payload, bits);
  }
  return build_wav(3, channels, rate, 32, payload);
}

inline std::vector<std::uint8_t> wav_pcm24(std::uint32_t rate, std::uint16_t channels,
                                           const std::vector<std::int32_t>& samples) {
  std::vector<std::uint8_t> payload;
  for (std::int32_t s : samples) {
    payload.push_back(static_cast<std::uint8_t>(s & 0xff));
    payload.push_back(static_cast<std::uint8_t>((s >> 8) & 0xff));
    payload.push_back(static_cast<std::uint8_t>((s >> 16) & 0xff));
  }
  return build_wav(1, channels, rate, 24, payload);
}

/// Extracts the data chunk payload from a WAV byte stream (for byte-level
/// idempotence checks).
inline std::vector<std::uint8_t> wav_payload(const std::vector<std::uint8_t>& bytes) {
  for (std::size_t offset = 12; offset + 8 <= bytes.size();) {
    const std::uint32_t size = static_cast<std::uint32_t>(bytes[offset + 4]) |
                               (static_cast<std::uint32_t>(bytes[offset + 5]) << 8) |
                               (static_cast<std::uint32_t>(bytes[offset + 6]) << 16) |
                               (static_cast<std::uint32_t>(bytes[offset + 7]) << 24);
    if (std::memcmp(bytes.data() + offset, "data", 4) == 0) {
      return {bytes.begin() + static_cast<std::ptrdiff_t>(offset + 8),
              bytes.begin() + static_cast<std::ptrdiff_t>(offset + 8 + size)};
    }
    offset += 8 + size + (size & 1);
  }
  return {};
}

/// Deterministic white-noise samples in [-1, 1].
inline std::vector<double> noise_samples(std::size_t count, std::uint32_t seed,
                                         double amplitude = 1.0) {
  std::mt19937 gen(seed);
  std::vector<double> out(count);
  for (auto& s : out) {
    s = amplitude * (2.0 * (gen() * (1.0 / 4294967296.0)) - 1.0);
  }
  return out;
}

}  // namespace testsupport
