// swara/error.h

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

#ifndef SWARA_ERROR_H_
#define SWARA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swara {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  // audio_io
  kMalformedHeader,
  kUnsupportedEncoding,
  kEmptyAudio,
  // dsp / tagging
  kSignalTooShort,
  kEmptyTranscript,
  kNonpositiveDuration,
  kAllSilent,
  kInsufficientVoicing,
  kUnknownFeature,
  kUnknownEmotion,
  kUnknownLanguage,
  // describe
  kMissingSlot,
  kMissingTags,
  // translit
  kUnmappableCharacter,
  kUnparseableSequence,
  kInvalidScheme,
  // codec
  kTooFewFrames,
  kDegenerateData,
  kDimensionMismatch,
  kIndexOutOfRange,
  kEmptyCodes,
  kCorruptCodebook,
  // metrics
  kEmptyReference,
  kCoeffMismatch,
  kLengthMismatch,
  kRateMismatch,
  kMissingMetric,
  kIdMismatch,
  // manifest
  kParseError,
  kDuplicateId,
  kDanglingAudioPath,
  kScriptMismatch,
  // cli
  kUnknownStage,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line` is the 1-based input line for
// errors that come from line-oriented files, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  // The message without the code name and line prefix.
  const std::string &message() const { return message_; }

 private:
  ErrorCode code_;
  std::size_t line_;
  std::string message_;
};

}  // namespace swara

#endif  // SWARA_ERROR_H_
