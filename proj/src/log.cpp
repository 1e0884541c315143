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

#include "cepstra/log.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <string>

namespace cepstra {
namespace {

LogLevel parse_level(const char* value) {
  if (value == nullptr) return LogLevel::kWarn;
  std::string v(value);
  for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "quiet" || v == "0") return LogLevel::kQuiet;
  if (v == "error" || v == "1") return LogLevel::kError;
  if (v == "warn" || v == "warning" || v == "2") return LogLevel::kWarn;
  if (v == "info" || v == "3") return LogLevel::kInfo;
  if (v == "debug" || v == "4") return LogLevel::kDebug;
  return LogLevel::kWarn;
}

std::atomic<int>& level_storage() {
  static std::atomic<int> level{static_cast<int>(parse_level(std::getenv("CEPSTRA_LOG")))};
  return level;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::kError: return "error";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kInfo: return "info";
    case LogLevel::kDebug: return "debug";
    default: return "log";
  }
}

}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_storage().load()); }

void set_log_level(LogLevel level) { level_storage().store(static_cast<int>(level)); }

bool log_enabled(LogLevel level) {
  return static_cast<int>(level) <= level_storage().load();
}

void log_message(LogLevel level, std::string_view message) {
  if (!log_enabled(level)) return;
  // single mutex keeps concurrent worker diagnostics from tearing lines
  static std::mutex io_mutex;
  std::lock_guard<std::mutex> lock(io_mutex);
  std::fprintf(stderr, "[%s] %.*s\n", level_tag(level),
               static_cast<int>(message.size()), message.data());
}

}  // namespace cepstra
