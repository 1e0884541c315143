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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cepstra {

enum class Cohort { kCovid, kHealthy };
enum class SoundKind { kCough, kBreath, kVoice };

Cohort parse_cohort(std::string_view text);     // case-insensitive, BadEnumValue
SoundKind parse_kind(std::string_view text);    // case-insensitive, BadEnumValue
std::string_view cohort_name(Cohort c);         // "covid" / "healthy"
std::string_view kind_name(SoundKind k);        // "cough" / "breath" / "voice"
std::string_view kind_display_name(SoundKind k);  // "Cough" / "Breath" / "Voice"
std::string_view cohort_display_name(Cohort c);   // "Covid-19" / "Non-Covid-19"

/// One labeled recording in a corpus manifest.
struct RecordingEntry {
  std::filesystem::path path;  // resolved against the manifest's directory
  std::string subject_id;
  Cohort cohort = Cohort::kHealthy;
  SoundKind kind = SoundKind::kCough;
  int session = 1;
};

/// "<subject>_<kind>_<session>", the identity used in matrix labels and
/// output file names.
std::string recording_label(const RecordingEntry& entry);

/// Parses a UTF-8 CSV manifest with header exactly
/// `path,subject_id,cohort,kind,session`. Entries come back in file order;
/// relative paths are resolved against the manifest's directory.
///
/// Errors: MissingColumn (bad header or short row), BadEnumValue (unknown
/// cohort/kind or non-positive session), DuplicateEntry (repeated
/// (subject_id, kind, session)).
std::vector<RecordingEntry> load_manifest(const std::filesystem::path& path);

/// Writes a manifest next to the recordings; entry paths are emitted relative
/// to the manifest's directory when possible.
void write_manifest(const std::filesystem::path& path,
                    const std::vector<RecordingEntry>& entries);

}  // namespace cepstra
