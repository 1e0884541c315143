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

#include <doctest.h>

#include <string>

#include "cepstra/error.hpp"
#include "cepstra/manifest.hpp"
#include "support.hpp"

using namespace cepstra;

namespace {

constexpr const char* kHeader = "path,subject_id,cohort,kind,session\n";

ErrorCode load_error(const std::filesystem::path& path) {
  try {
    load_manifest(path);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_CASE("a well-formed row parses directly") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, std::string(kHeader) + "a.wav,S1,COVID,COUGH,1\n");
  const auto entries = load_manifest(path);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].path == dir.file("a.wav"));
  CHECK(entries[0].subject_id == "S1");
  CHECK(entries[0].cohort == Cohort::kCovid);
  CHECK(entries[0].kind == SoundKind::kCough);
  CHECK(entries[0].session == 1);
  CHECK(recording_label(entries[0]) == "S1_cough_1");
}

TEST_CASE("cohort and kind parse case-insensitively") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, std::string(kHeader) +
                                    "a.wav,S1,covid,Breath,1\n"
                                    "b.wav,S2,Healthy,VOICE,2\n");
  const auto entries = load_manifest(path);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].kind == SoundKind::kBreath);
  CHECK(entries[1].cohort == Cohort::kHealthy);
  CHECK(entries[1].kind == SoundKind::kVoice);
}

TEST_CASE("unknown cohort raises BadEnumValue") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, std::string(kHeader) + "a.wav,S1,sick,COUGH,1\n");
  CHECK(load_error(path) == ErrorCode::kBadEnumValue);
}

TEST_CASE("bad session values raise BadEnumValue") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, std::string(kHeader) + "a.wav,S1,covid,cough,zero\n");
  CHECK(load_error(path) == ErrorCode::kBadEnumValue);
  testsupport::write_text(path, std::string(kHeader) + "a.wav,S1,covid,cough,0\n");
  CHECK(load_error(path) == ErrorCode::kBadEnumValue);
}

TEST_CASE("wrong header or column count raises MissingColumn") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, "path,subject,cohort,kind,session\na.wav,S1,covid,cough,1\n");
  CHECK(load_error(path) == ErrorCode::kMissingColumn);
  testsupport::write_text(path, std::string(kHeader) + "a.wav,S1,covid,cough\n");
  CHECK(load_error(path) == ErrorCode::kMissingColumn);
}

TEST_CASE("duplicate (subject, kind, session) raises DuplicateEntry") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, std::string(kHeader) +
                                    "a.wav,S1,covid,cough,1\n"
                                    "b.wav,S1,healthy,cough,1\n");  // cohort is not part of the key
  CHECK(load_error(path) == ErrorCode::kDuplicateEntry);
}

TEST_CASE("a 42-row corpus loads all entries in file order") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  // 7 healthy + 7 covid speakers, one recording per task each
  std::string text = kHeader;
  const char* kinds[] = {"cough", "breath", "voice"};
  for (int s = 1; s <= 7; ++s) {
    for (const char* kind : kinds) {
      text += "h" + std::to_string(s) + "_" + kind + ".wav,H" + std::to_string(s) +
              ",healthy," + kind + ",1\n";
      text += "c" + std::to_string(s) + "_" + kind + ".wav,C" + std::to_string(s) +
              ",covid," + kind + ",1\n";
    }
  }
  testsupport::write_text(path, text);
  const auto entries = load_manifest(path);
  CHECK(entries.size() == 42);
  CHECK(entries.front().subject_id == "H1");
  CHECK(entries.back().subject_id == "C7");
}

TEST_CASE("relative paths resolve against the manifest directory") {
  testsupport::TempDir dir;
  std::filesystem::create_directories(dir.file("sub"));
  const auto path = dir.file("sub") / "m.csv";
  testsupport::write_text(path, std::string(kHeader) + "audio/a.wav,S1,covid,cough,1\n");
  const auto entries = load_manifest(path);
  CHECK(entries[0].path == dir.file("sub") / "audio" / "a.wav");
}

TEST_CASE("windows line endings and BOM are tolerated") {
  testsupport::TempDir dir;
  const auto path = dir.file("m.csv");
  testsupport::write_text(path, "\xef\xbb\xbfpath,subject_id,cohort,kind,session\r\n"
                                "a.wav,S1,covid,cough,1\r\n");
  const auto entries = load_manifest(path);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].session == 1);
}

TEST_CASE("manifest write/load round trip preserves entries") {
  testsupport::TempDir dir;
  std::vector<RecordingEntry> entries;
  RecordingEntry e;
  e.path = dir.file("x.wav");
  e.subject_id = "S9";
  e.cohort = Cohort::kHealthy;
  e.kind = SoundKind::kVoice;
  e.session = 3;
  entries.push_back(e);
  const auto path = dir.file("m.csv");
  write_manifest(path, entries);
  const auto back = load_manifest(path);
  REQUIRE(back.size() == 1);
  CHECK(back[0].path == e.path);
  CHECK(back[0].subject_id == "S9");
  CHECK(back[0].cohort == Cohort::kHealthy);
  CHECK(back[0].kind == SoundKind::kVoice);
  CHECK(back[0].session == 3);
}
