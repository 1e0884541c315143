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

#include "cepstra/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"

namespace cepstra {
namespace {

constexpr std::string_view kHeader = "path,subject_id,cohort,kind,session";

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

Cohort parse_cohort(std::string_view text) {
  const std::string v = lower(text);
  if (v == "covid") return Cohort::kCovid;
  if (v == "healthy") return Cohort::kHealthy;
  raise(ErrorCode::kBadEnumValue, "unknown cohort '" + std::string(text) + "'");
}

SoundKind parse_kind(std::string_view text) {
  const std::string v = lower(text);
  if (v == "cough") return SoundKind::kCough;
  if (v == "breath") return SoundKind::kBreath;
  if (v == "voice") return SoundKind::kVoice;
  raise(ErrorCode::kBadEnumValue, "unknown kind '" + std::string(text) + "'");
}

std::string_view cohort_name(Cohort c) {
  return c == Cohort::kCovid ? "covid" : "healthy";
}

std::string_view kind_name(SoundKind k) {
  switch (k) {
    case SoundKind::kCough: return "cough";
    case SoundKind::kBreath: return "breath";
    case SoundKind::kVoice: return "voice";
  }
  return "cough";
}

std::string_view kind_display_name(SoundKind k) {
  switch (k) {
    case SoundKind::kCough: return "Cough";
    case SoundKind::kBreath: return "Breath";
    case SoundKind::kVoice: return "Voice";
  }
  return "Cough";
}

std::string_view cohort_display_name(Cohort c) {
  return c == Cohort::kCovid ? "Covid-19" : "Non-Covid-19";
}

std::string recording_label(const RecordingEntry& entry) {
  return entry.subject_id + "_" + std::string(kind_name(entry.kind)) + "_" +
         std::to_string(entry.session);
}

std::vector<RecordingEntry> load_manifest(const std::filesystem::path& path) {
  std::string text = read_file_text(path);
  // drop a UTF-8 BOM if present
  if (text.size() >= 3 && text.compare(0, 3, "\xef\xbb\xbf") == 0) text.erase(0, 3);

  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kHeader) {
    raise(ErrorCode::kMissingColumn,
          "manifest header must be exactly '" + std::string(kHeader) + "'");
  }

  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  std::vector<RecordingEntry> entries;
  std::set<std::tuple<std::string, SoundKind, int>> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = strip_cr(line);
    if (row.empty()) continue;
    const std::vector<std::string> fields = split_fields(row);
    if (fields.size() != 5) {
      raise(ErrorCode::kMissingColumn,
            "line " + std::to_string(line_no) + ": expected 5 columns, got " +
                std::to_string(fields.size()));
    }

    RecordingEntry entry;
    std::filesystem::path p(fields[0]);
    entry.path = p.is_absolute() ? p : base / p;
    entry.subject_id = fields[1];
    entry.cohort = parse_cohort(fields[2]);
    entry.kind = parse_kind(fields[3]);
    try {
      std::size_t used = 0;
      entry.session = std::stoi(fields[4], &used);
      if (used != fields[4].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      raise(ErrorCode::kBadEnumValue,
            "line " + std::to_string(line_no) + ": session '" + fields[4] +
                "' is not an integer");
    }
    if (entry.session < 1) {
      raise(ErrorCode::kBadEnumValue,
            "line " + std::to_string(line_no) + ": session must be >= 1");
    }

    if (!seen.emplace(entry.subject_id, entry.kind, entry.session).second) {
      raise(ErrorCode::kDuplicateEntry,
            "line " + std::to_string(line_no) + ": duplicate (" +
                entry.subject_id + ", " + std::string(kind_name(entry.kind)) +
                ", " + std::to_string(entry.session) + ")");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_manifest(const std::filesystem::path& path,
                    const std::vector<RecordingEntry>& entries) {
  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  std::string out(kHeader);
  out += '\n';
  for (const auto& e : entries) {
    std::error_code ec;
    std::filesystem::path rel = std::filesystem::relative(e.path, base, ec);
    const std::filesystem::path& emitted = (ec || rel.empty()) ? e.path : rel;
    out += emitted.generic_string();
    out += ',';
    out += e.subject_id;
    out += ',';
    out += cohort_name(e.cohort);
    out += ',';
    out += kind_name(e.kind);
    out += ',';
    out += std::to_string(e.session);
    out += '\n';
  }
  atomic_write_file(path, out);
}

}  // namespace cepstra
