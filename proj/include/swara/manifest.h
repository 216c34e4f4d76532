// swara/manifest.h

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

#ifndef SWARA_MANIFEST_H_
#define SWARA_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swara/audio_io.h"
#include "swara/tagging.h"
#include "swara/translit.h"

namespace swara {

// One manifest line (JSON object, UTF-8, no embedded newlines). Field order
// on write is fixed:
//
//   id            string, required, unique within the file
//   audio_path    string, required, relative to the manifest directory
//   transcription string, required, non-empty
//   language      "hindi" | "english" | "mixed"
//   emotion       one of kEmotionNames
//   speaker       string, required (may be empty)
//   tags          object, optional: speaking_rate, snr_db, reverb_rt_ms,
//                 monotony_semitones, mean_energy, duration_s (numbers) and
//                 labels (object of strings)
//   description   string, optional
//
// Numbers are written in shortest round-trip form, so reading a written
// value back yields the same double.
struct UtteranceRecord {
  std::string id;
  std::string audio_path;
  std::string transcription;
  Language language = Language::kEnglish;
  EmotionLabel emotion = EmotionLabel::kDefault;
  std::string speaker;
  std::optional<FeatureTags> tags;
  std::optional<std::string> description;

  friend bool operator==(const UtteranceRecord &,
                         const UtteranceRecord &) = default;
};

std::string RecordToJsonLine(const UtteranceRecord &record);
// `line` is only used for error reporting.
UtteranceRecord RecordFromJsonLine(std::string_view text, int line = 0);

// Throws kScriptMismatch when a hindi record has no Devanagari span or a
// mixed record lacks either script; kEmptyTranscript when blank.
void ValidateScript(const UtteranceRecord &record, int line = 0);

/// Reads and validates every line. Blank lines are skipped. Errors carry the
/// 1-based line number: kParseError, kDuplicateId (on the repeat),
/// kDanglingAudioPath (absolute, escaping the manifest directory, or missing),
/// kScriptMismatch.
std::vector<UtteranceRecord> LoadManifest(const std::filesystem::path &path);

/// Same as LoadManifest, minus the audio existence check.
std::vector<UtteranceRecord> ParseManifest(std::string_view text,
                                           const std::filesystem::path &root,
                                           bool check_audio);

void WriteManifest(const std::vector<UtteranceRecord> &records,
                   const std::filesystem::path &path);
std::string SerializeManifest(const std::vector<UtteranceRecord> &records);

/// Absolute location of a record's audio given the manifest path.
std::filesystem::path ResolveAudio(const std::filesystem::path &manifest_path,
                                   const UtteranceRecord &record);

struct PairingDiagnostics {
  bool duration_out_of_range = false;  // outside [0.3 s, 60 s]
  bool rate_out_of_range = false;      // outside [1, 30] phonemes/s
  bool clipped = false;                // >= 0.1% samples with |s| >= 0.999
  bool silent = false;
  double duration_s = 0.0;
  double speaking_rate = 0.0;
  double clipped_fraction = 0.0;

  bool ok() const {
    return !duration_out_of_range && !rate_out_of_range && !clipped && !silent;
  }
  std::vector<std::string> flags() const;

  friend bool operator==(const PairingDiagnostics &,
                         const PairingDiagnostics &) = default;
};

inline constexpr double kMinDurationS = 0.3;
inline constexpr double kMaxDurationS = 60.0;
inline constexpr double kMinRate = 1.0;
inline constexpr double kMaxRate = 30.0;
inline constexpr double kClipLevel = 0.999;
inline constexpr double kClipFraction = 0.001;

PairingDiagnostics ValidatePairing(const UtteranceRecord &record,
                                   const AudioBuffer &buf);

}  // namespace swara

#endif  // SWARA_MANIFEST_H_
