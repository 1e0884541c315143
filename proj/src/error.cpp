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

#include "cepstra/error.hpp"

namespace cepstra {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kUnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::kCorruptHeader: return "CorruptHeader";
    case ErrorCode::kEmptyAudio: return "EmptyAudio";
    case ErrorCode::kAllSilent: return "AllSilent";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kBadEnumValue: return "BadEnumValue";
    case ErrorCode::kDuplicateEntry: return "DuplicateEntry";
    case ErrorCode::kSignalTooShort: return "SignalTooShort";
    case ErrorCode::kNonPowerOfTwoFrame: return "NonPowerOfTwoFrame";
    case ErrorCode::kTooManyFilters: return "TooManyFilters";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kTooFewFrames: return "TooFewFrames";
    case ErrorCode::kTooFewCoeffs: return "TooFewCoeffs";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kNoEntries: return "NoEntries";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyReport: return "EmptyReport";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace cepstra
