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

#include "cepstra/mfcc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "cepstra/error.hpp"
#include "cepstra/fft.hpp"
#include "cepstra/log.hpp"
#include "cepstra/util.hpp"

namespace cepstra {

void MfccConfig::validate() const {
  if (pre_emphasis_a < 0.0 || pre_emphasis_a >= 1.0) {
    raise(ErrorCode::kBadConfig, "pre_emphasis_a must lie in [0, 1)");
  }
  if (frame_len_samples < 2) {
    raise(ErrorCode::kBadConfig, "frame_len_samples must be at least 2");
  }
  if (!is_power_of_two(static_cast<std::size_t>(frame_len_samples))) {
    raise(ErrorCode::kNonPowerOfTwoFrame,
          "frame_len_samples " + std::to_string(frame_len_samples) +
              " is not a power of two");
  }
  if (hop_samples < 1 || hop_samples >= frame_len_samples) {
    raise(ErrorCode::kBadConfig, "hop_samples must satisfy 0 < hop < frame length");
  }
  if (num_filters < 1) raise(ErrorCode::kBadConfig, "num_filters must be positive");
  if (num_coeffs < 1 || num_coeffs > num_filters) {
    raise(ErrorCode::kBadConfig, "num_coeffs must lie in [1, num_filters]");
  }
  if (keep_coeffs < 1 || keep_coeffs > num_coeffs) {
    raise(ErrorCode::kBadConfig, "keep_coeffs must lie in [1, num_coeffs]");
  }
  if (!(log_floor > 0.0)) raise(ErrorCode::kBadConfig, "log_floor must be positive");
}

AudioClip pre_emphasize(const AudioClip& clip, double a) {
  if (a < 0.0 || a >= 1.0) raise(ErrorCode::kBadConfig, "pre-emphasis a must lie in [0, 1)");
  validate_clip(clip);
  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.samples.resize(clip.samples.size());
  out.samples[0] = clip.samples[0];  // first sample passes through unfiltered
  for (std::size_t n = 1; n < clip.samples.size(); ++n) {
    out.samples[n] = clip.samples[n] - a * clip.samples[n - 1];
  }
  return out;
}

FrameMatrix frame_signal(const AudioClip& clip, int frame_len, int hop) {
  validate_clip(clip);
  if (frame_len < 2) raise(ErrorCode::kBadConfig, "frame length must be at least 2");
  if (hop < 1 || hop >= frame_len) {
    raise(ErrorCode::kBadConfig, "hop must satisfy 0 < hop < frame length");
  }
  const std::size_t n = clip.samples.size();
  if (n < static_cast<std::size_t>(frame_len)) {
    raise(ErrorCode::kSignalTooShort,
          "signal of " + std::to_string(n) + " samples is shorter than one frame (" +
              std::to_string(frame_len) + ")");
  }

  const double duration_ms = 1000.0 * frame_len / clip.sample_rate_hz;
  if (duration_ms < 20.0 || duration_ms > 40.0) {
    log_warn("frame duration " + format_fixed(duration_ms, 1) +
             " ms lies outside the usual 20-40 ms analysis range");
  }

  FrameMatrix frames;
  frames.frame_len_samples = frame_len;
  frames.hop_samples = hop;
  frames.num_frames = (n - static_cast<std::size_t>(frame_len)) /
                          static_cast<std::size_t>(hop) +
                      1;
  frames.data.resize(frames.num_frames * static_cast<std::size_t>(frame_len));
  for (std::size_t t = 0; t < frames.num_frames; ++t) {
    const double* src = clip.samples.data() + t * static_cast<std::size_t>(hop);
    std::copy(src, src + frame_len, frames.frame(t).data());
  }
  return frames;
}

std::vector<double> hamming_window(int n) {
  if (n < 2) raise(ErrorCode::kBadConfig, "window length must be at least 2");
  std::vector<double> w(static_cast<std::size_t>(n));
  // fill half and mirror so w(n) == w(N-1-n) holds bit-exactly
  for (int i = 0; i <= (n - 1) / 2; ++i) {
    const double v = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
    w[static_cast<std::size_t>(i)] = v;
    w[static_cast<std::size_t>(n - 1 - i)] = v;
  }
  return w;
}

FrameMatrix apply_window(FrameMatrix frames) {
  const std::vector<double> w = hamming_window(frames.frame_len_samples);
  for (std::size_t t = 0; t < frames.num_frames; ++t) {
    auto frame = frames.frame(t);
    for (std::size_t i = 0; i < frame.size(); ++i) frame[i] *= w[i];
  }
  return frames;
}

Spectrogram power_spectrum(const FrameMatrix& frames) {
  if (!is_power_of_two(static_cast<std::size_t>(frames.frame_len_samples))) {
    raise(ErrorCode::kNonPowerOfTwoFrame,
          "frame length " + std::to_string(frames.frame_len_samples) +
              " is not a power of two");
  }
  Spectrogram spectra;
  spectra.num_frames = frames.num_frames;
  spectra.num_bins = static_cast<std::size_t>(frames.frame_len_samples) / 2 + 1;
  spectra.data.resize(spectra.num_frames * spectra.num_bins);
  for (std::size_t t = 0; t < frames.num_frames; ++t) {
    const std::vector<double> row = power_spectrum_frame(frames.frame(t));
    std::copy(row.begin(), row.end(), spectra.data.begin() + static_cast<std::ptrdiff_t>(t * spectra.num_bins));
  }
  return spectra;
}

double mel_from_hz(double hz) { return 2595.0 * std::log10(1.0 + hz / 1000.0); }

double hz_from_mel(double mel) {
  return 1000.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterBank build_filterbank(int sample_rate_hz, int fft_size, int num_filters) {
  if (sample_rate_hz <= 0) raise(ErrorCode::kBadConfig, "sample rate must be positive");
  if (num_filters < 1) raise(ErrorCode::kBadConfig, "num_filters must be positive");
  if (fft_size < 2 || !is_power_of_two(static_cast<std::size_t>(fft_size))) {
    raise(ErrorCode::kNonPowerOfTwoFrame,
          "fft size " + std::to_string(fft_size) + " is not a power of two");
  }

  MelFilterBank bank;
  bank.sample_rate_hz = sample_rate_hz;
  bank.fft_size = fft_size;
  bank.num_filters = num_filters;
  const std::size_t bins = bank.num_bins();

  // num_filters + 2 boundary points, equally spaced in mel from DC to Nyquist
  const double mel_max = mel_from_hz(sample_rate_hz / 2.0);
  std::vector<double> boundary(static_cast<std::size_t>(num_filters) + 2);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    boundary[i] = mel_max * static_cast<double>(i) / (num_filters + 1);
  }
  bank.center_freqs_hz.reserve(static_cast<std::size_t>(num_filters));

  std::vector<double> bin_mel(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    bin_mel[k] = mel_from_hz(static_cast<double>(k) * sample_rate_hz / fft_size);
  }

  bank.weights.assign(static_cast<std::size_t>(num_filters) * bins, 0.0);
  for (int f = 0; f < num_filters; ++f) {
    const double lo = boundary[static_cast<std::size_t>(f)];
    const double peak = boundary[static_cast<std::size_t>(f) + 1];
    const double hi = boundary[static_cast<std::size_t>(f) + 2];
    bank.center_freqs_hz.push_back(hz_from_mel(peak));
    double row_max = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
      const double m = bin_mel[k];
      double w = 0.0;
      if (m > lo && m <= peak) {
        w = (m - lo) / (peak - lo);
      } else if (m > peak && m < hi) {
        w = (hi - m) / (hi - peak);
      }
      bank.weights[static_cast<std::size_t>(f) * bins + k] = w;
      row_max = std::max(row_max, w);
    }
    if (row_max < 0.5) {
      raise(ErrorCode::kTooManyFilters,
            "filter " + std::to_string(f + 1) + " of " + std::to_string(num_filters) +
                " has no meaningful support on the " + std::to_string(fft_size) +
                "-point FFT grid");
    }
  }
  return bank;
}

std::vector<double> filter_energies(std::span<const double> spectrum_row,
                                    const MelFilterBank& bank, double log_floor) {
  if (spectrum_row.size() != bank.num_bins()) {
    raise(ErrorCode::kLengthMismatch,
          "spectrum has " + std::to_string(spectrum_row.size()) + " bins, bank expects " +
              std::to_string(bank.num_bins()));
  }
  if (!(log_floor > 0.0)) raise(ErrorCode::kBadConfig, "log floor must be positive");
  std::vector<double> energies(static_cast<std::size_t>(bank.num_filters));
  for (int f = 0; f < bank.num_filters; ++f) {
    const auto weights = bank.filter(f);
    double acc = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) acc += weights[k] * spectrum_row[k];
    energies[static_cast<std::size_t>(f)] = std::log(std::max(acc, log_floor));
  }
  return energies;
}

namespace {

// basis[n-1][k-1] = cos(n * (k - 0.5) * pi / F) for n = 1..num_coeffs
std::vector<double> dct_basis(int f_count, int num_coeffs) {
  std::vector<double> basis(static_cast<std::size_t>(num_coeffs) *
                            static_cast<std::size_t>(f_count));
  const double step = std::numbers::pi / f_count;
  for (int n = 1; n <= num_coeffs; ++n) {
    for (int k = 1; k <= f_count; ++k) {
      basis[static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(f_count) +
            static_cast<std::size_t>(k - 1)] = std::cos(n * (k - 0.5) * step);
    }
  }
  return basis;
}

}  // namespace

std::vector<double> dct_coeffs(std::span<const double> energies, int num_coeffs) {
  const auto f_count = static_cast<int>(energies.size());
  if (num_coeffs < 1 || num_coeffs > f_count) {
    raise(ErrorCode::kBadConfig, "num_coeffs must lie in [1, filter count]");
  }
  const std::vector<double> basis = dct_basis(f_count, num_coeffs);
  std::vector<double> coeffs(static_cast<std::size_t>(num_coeffs));
  for (int n = 0; n < num_coeffs; ++n) {
    const double* row = basis.data() + static_cast<std::size_t>(n) * energies.size();
    double acc = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) acc += row[k] * energies[k];
    coeffs[static_cast<std::size_t>(n)] = acc;
  }
  return coeffs;
}

MfccMatrix extract_mfcc(const AudioClip& clip, const MfccConfig& cfg) {
  cfg.validate();
  const AudioClip emphasized = pre_emphasize(clip, cfg.pre_emphasis_a);
  FrameMatrix frames =
      apply_window(frame_signal(emphasized, cfg.frame_len_samples, cfg.hop_samples));
  const Spectrogram spectra = power_spectrum(frames);
  const MelFilterBank bank =
      build_filterbank(clip.sample_rate_hz, cfg.frame_len_samples, cfg.num_filters);

  MfccMatrix out;
  out.config = cfg;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.num_coeffs = static_cast<std::size_t>(cfg.num_coeffs);
  out.num_frames = spectra.num_frames;
  out.data.resize(out.num_coeffs * out.num_frames);
  for (std::size_t t = 0; t < spectra.num_frames; ++t) {
    const std::vector<double> energies = filter_energies(spectra.row(t), bank, cfg.log_floor);
    const std::vector<double> coeffs = dct_coeffs(energies, cfg.num_coeffs);
    for (std::size_t r = 0; r < out.num_coeffs; ++r) {
      out.data[r * out.num_frames + t] = coeffs[r];
    }
  }
  return out;
}

MfccMatrix select_coeffs(const MfccMatrix& m, int keep) {
  if (keep < 1 || static_cast<std::size_t>(keep) > m.num_coeffs) {
    raise(ErrorCode::kBadConfig,
          "cannot keep " + std::to_string(keep) + " of " +
              std::to_string(m.num_coeffs) + " coefficients");
  }
  MfccMatrix out;
  out.config = m.config;
  out.sample_rate_hz = m.sample_rate_hz;
  out.num_coeffs = static_cast<std::size_t>(keep);
  out.num_frames = m.num_frames;
  out.data.assign(m.data.begin(),
                  m.data.begin() + static_cast<std::ptrdiff_t>(out.num_coeffs * m.num_frames));
  return out;
}

std::string mfcc_to_csv(const MfccMatrix& m) {
  std::string out;
  for (std::size_t t = 0; t < m.num_frames; ++t) {
    if (t > 0) out += ',';
    out += "frame_" + std::to_string(t);
  }
  out += '\n';
  for (std::size_t r = 0; r < m.num_coeffs; ++r) {
    for (std::size_t t = 0; t < m.num_frames; ++t) {
      if (t > 0) out += ',';
      out += format_double(m.at(r, t));
    }
    out += '\n';
  }
  return out;
}

std::string mfcc_to_json(const MfccMatrix& m) {
  nlohmann::json j;
  j["config"] = {
      {"pre_emphasis_a", m.config.pre_emphasis_a},
      {"frame_len_samples", m.config.frame_len_samples},
      {"hop_samples", m.config.hop_samples},
      {"num_filters", m.config.num_filters},
      {"num_coeffs", m.config.num_coeffs},
      {"keep_coeffs", m.config.keep_coeffs},
      {"log_floor", m.config.log_floor},
      {"sample_rate_hz", m.sample_rate_hz},
  };
  j["shape"] = {m.num_coeffs, m.num_frames};
  j["data"] = m.data;
  return j.dump() + "\n";
}

MfccMatrix mfcc_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    MfccMatrix m;
    const auto& cfg = j.at("config");
    m.config.pre_emphasis_a = cfg.at("pre_emphasis_a").get<double>();
    m.config.frame_len_samples = cfg.at("frame_len_samples").get<int>();
    m.config.hop_samples = cfg.at("hop_samples").get<int>();
    m.config.num_filters = cfg.at("num_filters").get<int>();
    m.config.num_coeffs = cfg.at("num_coeffs").get<int>();
    m.config.keep_coeffs = cfg.at("keep_coeffs").get<int>();
    m.config.log_floor = cfg.at("log_floor").get<double>();
    m.sample_rate_hz = cfg.at("sample_rate_hz").get<int>();
    m.num_coeffs = j.at("shape").at(0).get<std::size_t>();
    m.num_frames = j.at("shape").at(1).get<std::size_t>();
    m.data = j.at("data").get<std::vector<double>>();
    if (m.data.size() != m.num_coeffs * m.num_frames) {
      raise(ErrorCode::kCorruptHeader, "feature data does not match its shape");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kCorruptHeader, std::string("malformed feature JSON: ") + e.what());
  }
}

}  // namespace cepstra
