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

#include "cepstra/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "cepstra/error.hpp"
#include "cepstra/util.hpp"
#include "cepstra/wav.hpp"

namespace cepstra {
namespace {

// mt19937 plus hand-rolled transforms, so streams are identical across
// standard libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : gen_(static_cast<std::uint32_t>(seed ^ (seed >> 32))) {}

  double uniform() { return gen_() * (1.0 / 4294967296.0); }  // [0, 1)

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (gen_() + 1.0) * (1.0 / 4294967296.0);  // (0, 1]
    const double u2 = gen_() * (1.0 / 4294967296.0);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct Voicing {
  double fundamental_hz;
  double tilt;  // harmonic h gets amplitude 1/h^tilt
};

// The two cohorts differ in both fundamental and spectral tilt so their mel
// energy patterns separate cleanly; kinds differ mostly in envelope.
Voicing voicing_for(Cohort cohort, SoundKind kind) {
  const bool covid = cohort == Cohort::kCovid;
  switch (kind) {
    case SoundKind::kCough: return covid ? Voicing{170.0, 1.5} : Voicing{330.0, 0.5};
    case SoundKind::kBreath: return covid ? Voicing{130.0, 1.3} : Voicing{260.0, 0.4};
    case SoundKind::kVoice: return covid ? Voicing{210.0, 1.4} : Voicing{410.0, 0.6};
  }
  return {200.0, 1.0};
}

double envelope_at(SoundKind kind, double t01) {
  switch (kind) {
    case SoundKind::kCough: {
      // two bursts with a quiet stretch between
      const double b1 = std::exp(-0.5 * std::pow((t01 - 0.3) / 0.12, 2.0));
      const double b2 = std::exp(-0.5 * std::pow((t01 - 0.7) / 0.12, 2.0));
      return 0.05 + 0.95 * std::max(b1, b2);
    }
    case SoundKind::kBreath:
      return 0.05 + 0.95 * std::pow(std::sin(std::numbers::pi * t01), 2.0);
    case SoundKind::kVoice: {
      const double edge = 0.05;
      double gain = 1.0;
      if (t01 < edge) gain = 0.5 - 0.5 * std::cos(std::numbers::pi * t01 / edge);
      if (t01 > 1.0 - edge) {
        gain = 0.5 - 0.5 * std::cos(std::numbers::pi * (1.0 - t01) / edge);
      }
      return 0.05 + 0.95 * gain;
    }
  }
  return 1.0;
}

}  // namespace

AudioClip synth_recording(const SynthConfig& cfg, Cohort cohort, SoundKind kind,
                          int subject_index) {
  if (cfg.subjects_per_cohort < 1 || cfg.sample_rate_hz <= 0 ||
      cfg.body_seconds <= 0.0 || cfg.pad_seconds < 0.0) {
    raise(ErrorCode::kBadConfig, "invalid synthesis parameters");
  }
  const std::string stream = std::to_string(cfg.seed) + "|" +
                             std::string(cohort_name(cohort)) + "|" +
                             std::string(kind_name(kind)) + "|" +
                             std::to_string(subject_index);
  Rng rng(fnv1a64(stream));

  const Voicing voicing = voicing_for(cohort, kind);
  // subjects of one cohort are detuned, slightly re-tilted variants of the
  // same stack
  const double detune =
      1.0 + 0.015 * (subject_index - 0.5 * (cfg.subjects_per_cohort - 1)) +
      0.004 * (rng.uniform() - 0.5);
  const double f0 = voicing.fundamental_hz * detune;
  const double tilt = voicing.tilt + 0.15 * (rng.uniform() - 0.5);

  constexpr int kHarmonics = 6;
  double phase[kHarmonics];
  double amp[kHarmonics];
  for (int h = 0; h < kHarmonics; ++h) {
    phase[h] = 2.0 * std::numbers::pi * rng.uniform();
    amp[h] = (1.0 + 0.1 * (rng.uniform() - 0.5)) / std::pow(h + 1.0, tilt);
  }

  const auto body_len = static_cast<std::size_t>(
      std::llround(cfg.body_seconds * cfg.sample_rate_hz));
  const auto pad_len = static_cast<std::size_t>(
      std::llround(cfg.pad_seconds * cfg.sample_rate_hz));

  std::vector<double> body(body_len);
  double peak = 0.0;
  for (std::size_t n = 0; n < body_len; ++n) {
    const double t = static_cast<double>(n) / cfg.sample_rate_hz;
    const double t01 = static_cast<double>(n) / static_cast<double>(body_len);
    double s = 0.0;
    for (int h = 0; h < kHarmonics; ++h) {
      s += amp[h] * std::sin(2.0 * std::numbers::pi * f0 * (h + 1) * t + phase[h]);
    }
    s = s * envelope_at(kind, t01) + 0.004 * rng.gaussian();
    body[n] = s;
    peak = std::max(peak, std::fabs(s));
  }
  const double gain = peak > 0.0 ? 0.6 / peak : 1.0;

  AudioClip clip;
  clip.sample_rate_hz = cfg.sample_rate_hz;
  clip.samples.assign(pad_len, 0.0);
  for (double s : body) clip.samples.push_back(s * gain);
  clip.samples.insert(clip.samples.end(), pad_len, 0.0);
  return clip;
}

std::filesystem::path generate_corpus(const SynthConfig& cfg,
                                      const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<RecordingEntry> entries;
  const Cohort cohorts[] = {Cohort::kHealthy, Cohort::kCovid};
  const SoundKind kinds[] = {SoundKind::kCough, SoundKind::kBreath, SoundKind::kVoice};
  for (Cohort cohort : cohorts) {
    for (SoundKind kind : kinds) {
      for (int subject = 0; subject < cfg.subjects_per_cohort; ++subject) {
        RecordingEntry entry;
        entry.subject_id = (cohort == Cohort::kCovid ? "C" : "H") + std::to_string(subject + 1);
        entry.cohort = cohort;
        entry.kind = kind;
        entry.session = 1;
        entry.path = dir / (recording_label(entry) + ".wav");
        write_wav_pcm16(entry.path, synth_recording(cfg, cohort, kind, subject));
        entries.push_back(std::move(entry));
      }
    }
  }
  const std::filesystem::path manifest = dir / "manifest.csv";
  write_manifest(manifest, entries);
  return manifest;
}

}  // namespace cepstra
