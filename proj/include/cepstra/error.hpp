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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cepstra {

enum class ErrorCode {
  // audio decoding / trimming
  kFileNotFound,
  kUnsupportedEncoding,
  kCorruptHeader,
  kEmptyAudio,
  kAllSilent,
  // manifest parsing
  kMissingColumn,
  kBadEnumValue,
  kDuplicateEntry,
  // feature extraction
  kSignalTooShort,
  kNonPowerOfTwoFrame,
  kTooManyFilters,
  kBadConfig,
  // correlation
  kLengthMismatch,
  kDegenerateInput,
  kTooFewFrames,
  kTooFewCoeffs,
  kEmptyGroup,
  kNoEntries,
  kOutOfRange,
  // reporting / io
  kEmptyReport,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying a stable error code alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cepstra
