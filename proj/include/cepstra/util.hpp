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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cepstra {

/// Shortest decimal string that round-trips the value (std::to_chars).
std::string format_double(double value);

/// %.12g formatting used by the canonical JSON writer.
std::string format_double_12g(double value);

/// Fixed-point decimal rounding, half away from zero, applied to the value's
/// shortest round-trip decimal representation. format_fixed(0.425, 2) == "0.43"
/// even though the nearest binary double sits just below 0.425.
std::string format_fixed(double value, int places);

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(std::string_view text);
std::string hex_digest(std::uint64_t value);

bool is_power_of_two(std::size_t n);

/// Whole-file read; FileNotFound when the file cannot be opened.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
std::string read_file_text(const std::filesystem::path& path);

/// Write via temp file + rename so readers never observe partial content.
void atomic_write_file(const std::filesystem::path& path, std::string_view bytes);

/// Runs body(0..count-1) on up to `jobs` threads. Ordering of invocations is
/// unspecified; callers own any ordering of results. The first exception thrown
/// by a body is rethrown after all workers drain.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace cepstra
