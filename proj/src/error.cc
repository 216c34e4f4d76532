// src/error.cc

// Copyright 2026 The Swara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swara/error.h"

namespace swara {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kUnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::kEmptyAudio: return "EmptyAudio";
    case ErrorCode::kSignalTooShort: return "SignalTooShort";
    case ErrorCode::kEmptyTranscript: return "EmptyTranscript";
    case ErrorCode::kNonpositiveDuration: return "NonpositiveDuration";
    case ErrorCode::kAllSilent: return "AllSilent";
    case ErrorCode::kInsufficientVoicing: return "InsufficientVoicing";
    case ErrorCode::kUnknownFeature: return "UnknownFeature";
    case ErrorCode::kUnknownEmotion: return "UnknownEmotion";
    case ErrorCode::kUnknownLanguage: return "UnknownLanguage";
    case ErrorCode::kMissingSlot: return "MissingSlot";
    case ErrorCode::kMissingTags: return "MissingTags";
    case ErrorCode::kUnmappableCharacter: return "UnmappableCharacter";
    case ErrorCode::kUnparseableSequence: return "UnparseableSequence";
    case ErrorCode::kInvalidScheme: return "InvalidScheme";
    case ErrorCode::kTooFewFrames: return "TooFewFrames";
    case ErrorCode::kDegenerateData: return "DegenerateData";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyCodes: return "EmptyCodes";
    case ErrorCode::kCorruptCodebook: return "CorruptCodebook";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kCoeffMismatch: return "CoeffMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kRateMismatch: return "RateMismatch";
    case ErrorCode::kMissingMetric: return "MissingMetric";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDanglingAudioPath: return "DanglingAudioPath";
    case ErrorCode::kScriptMismatch: return "ScriptMismatch";
    case ErrorCode::kUnknownStage: return "UnknownStage";
  }
  return "Unknown";
}

static std::string Decorate(ErrorCode code, const std::string &message,
                            std::size_t line) {
  std::string out(ErrorCodeName(code));
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

Error::Error(ErrorCode code, const std::string &message, std::size_t line)
    : std::runtime_error(Decorate(code, message, line)),
      code_(code),
      line_(line),
      message_(message) {}

}  // namespace swara
