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

#include <cmath>

#include "cepstra/error.hpp"
#include "cepstra/trim.hpp"
#include "support.hpp"

using namespace cepstra;

namespace {

AudioClip silence_signal_silence(std::size_t lead, std::size_t body, std::size_t tail,
                                 int rate) {
  AudioClip clip;
  clip.sample_rate_hz = rate;
  clip.samples.assign(lead, 0.0);
  for (std::size_t i = 0; i < body; ++i) {
    clip.samples.push_back(i % 2 == 0 ? 1.0 : -1.0);  // full-scale square wave
  }
  clip.samples.insert(clip.samples.end(), tail, 0.0);
  return clip;
}

}  // namespace

TEST_CASE("rms_dbfs floors pure silence at -200 dBFS") {
  std::vector<double> zeros(160, 0.0);
  CHECK(rms_dbfs(zeros) == doctest::Approx(-200.0));
  std::vector<double> full(160, 1.0);
  CHECK(rms_dbfs(full) == doctest::Approx(0.0));
}

TEST_CASE("silence-signal-silence trims to exactly the middle span") {
  // 100 ms zeros + 100 ms square + 100 ms zeros at 8 kHz, 20 ms windows
  const AudioClip clip = silence_signal_silence(800, 800, 800, 8000);
  const TrimConfig cfg;
  const TrimSpan span = find_active_span(clip, cfg);
  CHECK(span.begin == 800);
  CHECK(span.end == 1600);
  const AudioClip out = trim_silence(clip, cfg);
  CHECK(out.samples.size() == 800);
  CHECK(out.samples.front() == 1.0);
}

TEST_CASE("clip with no silent edges passes through unchanged") {
  AudioClip clip = silence_signal_silence(0, 1600, 0, 8000);
  const AudioClip out = trim_silence(clip, TrimConfig{});
  CHECK(out.samples == clip.samples);
}

TEST_CASE("all-silent clip raises AllSilent") {
  AudioClip clip;
  clip.sample_rate_hz = 8000;
  clip.samples.assign(4000, 0.0);
  try {
    trim_silence(clip, TrimConfig{});
    FAIL("expected AllSilent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAllSilent);
  }
}

TEST_CASE("interior quiet windows are never removed") {
  // loud - quiet - loud: output must keep the quiet middle
  AudioClip clip;
  clip.sample_rate_hz = 8000;
  clip.samples.assign(320, 0.0);
  for (int i = 0; i < 160; ++i) clip.samples.push_back(0.9);
  clip.samples.insert(clip.samples.end(), 480, 0.0);
  for (int i = 0; i < 160; ++i) clip.samples.push_back(0.9);
  clip.samples.insert(clip.samples.end(), 320, 0.0);

  const TrimSpan span = find_active_span(clip, TrimConfig{});
  CHECK(span.begin == 320);
  CHECK(span.end == 320 + 160 + 480 + 160);
}

TEST_CASE("trim is idempotent across random padded clips") {
  for (std::uint32_t seed = 1; seed <= 12; ++seed) {
    AudioClip clip;
    clip.sample_rate_hz = 8000;
    // random-length silent pads around a noise burst, not window-aligned
    const std::size_t lead = 37 * seed;
    const std::size_t tail = 211 * ((seed * 7) % 5 + 1);
    clip.samples.assign(lead, 0.0);
    const auto body = testsupport::noise_samples(1000 + 13 * seed, seed, 0.8);
    clip.samples.insert(clip.samples.end(), body.begin(), body.end());
    clip.samples.insert(clip.samples.end(), tail, 0.0);

    const AudioClip once = trim_silence(clip, TrimConfig{});
    const AudioClip twice = trim_silence(once, TrimConfig{});
    CHECK(twice.samples == once.samples);
    CHECK(once.samples.size() <= clip.samples.size());
  }
}

TEST_CASE("trimmed output is a contiguous sub-span of the input") {
  AudioClip clip;
  clip.sample_rate_hz = 8000;
  clip.samples.assign(500, 0.0);
  const auto body = testsupport::noise_samples(900, 3, 0.5);
  clip.samples.insert(clip.samples.end(), body.begin(), body.end());
  clip.samples.insert(clip.samples.end(), 700, 0.0);

  const TrimSpan span = find_active_span(clip, TrimConfig{});
  const AudioClip out = trim_silence(clip, TrimConfig{});
  REQUIRE(out.samples.size() == span.end - span.begin);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    CHECK(out.samples[i] == clip.samples[span.begin + i]);
  }
}

TEST_CASE("trim config is validated") {
  AudioClip clip;
  clip.sample_rate_hz = 8000;
  clip.samples.assign(100, 0.5);
  try {
    trim_silence(clip, TrimConfig{-5.0, -40.0});
    FAIL("expected BadConfig");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadConfig);
  }
  try {
    trim_silence(clip, TrimConfig{20.0, 3.0});
    FAIL("expected BadConfig");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadConfig);
  }
}
