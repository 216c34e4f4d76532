// src/manifest.cc

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

#include "swara/manifest.h"

#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"
#include "swara/error.h"

namespace swara {

using nlohmann::ordered_json;

std::string RecordToJsonLine(const UtteranceRecord &r) {
  ordered_json j;
  j["id"] = r.id;
  j["audio_path"] = r.audio_path;
  j["transcription"] = r.transcription;
  j["language"] = LanguageName(r.language);
  j["emotion"] = EmotionName(r.emotion);
  j["speaker"] = r.speaker;
  if (r.tags) {
    const FeatureTags &t = *r.tags;
    ordered_json tags;
    tags["speaking_rate"] = t.speaking_rate;
    tags["snr_db"] = t.snr_db;
    tags["reverb_rt_ms"] = t.reverb_rt_ms;
    tags["monotony_semitones"] = t.monotony_semitones;
    tags["mean_energy"] = t.mean_energy;
    tags["duration_s"] = t.duration_s;
    tags["labels"] = t.labels;
    j["tags"] = tags;
  }
  if (r.description) j["description"] = *r.description;
  return j.dump();
}

namespace {

std::string RequireString(const ordered_json &j, const char *key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  if (!j.at(key).is_string())
    throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

double RequireNumber(const ordered_json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw std::invalid_argument(std::string("tags field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

UtteranceRecord RecordFromJsonLine(std::string_view text, int line) {
  UtteranceRecord r;
  std::string language, emotion;
  try {
    const ordered_json j = ordered_json::parse(text.begin(), text.end());
    if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
    r.id = RequireString(j, "id");
    if (r.id.empty()) throw std::invalid_argument("empty id");
    r.audio_path = RequireString(j, "audio_path");
    r.transcription = RequireString(j, "transcription");
    language = RequireString(j, "language");
    emotion = RequireString(j, "emotion");
    r.speaker = RequireString(j, "speaker");
    if (j.contains("tags") && !j.at("tags").is_null()) {
      const ordered_json &t = j.at("tags");
      if (!t.is_object()) throw std::invalid_argument("'tags' must be an object");
      FeatureTags tags;
      tags.speaking_rate = RequireNumber(t, "speaking_rate");
      tags.snr_db = RequireNumber(t, "snr_db");
      tags.reverb_rt_ms = RequireNumber(t, "reverb_rt_ms");
      tags.monotony_semitones = RequireNumber(t, "monotony_semitones");
      tags.mean_energy = RequireNumber(t, "mean_energy");
      tags.duration_s = RequireNumber(t, "duration_s");
      if (t.contains("labels")) {
        for (const auto &[k, v] : t.at("labels").items()) {
          if (!v.is_string())
            throw std::invalid_argument("label '" + k + "' must be a string");
          tags.labels[k] = v.get<std::string>();
        }
      }
      r.tags = std::move(tags);
    }
    if (j.contains("description") && !j.at("description").is_null())
      r.description = RequireString(j, "description");
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError, e.what(), line);
  } catch (const std::invalid_argument &e) {
    throw Error(ErrorCode::kParseError, e.what(), line);
  }
  try {
    r.language = ParseLanguage(language);
    r.emotion = ParseEmotion(emotion);
  } catch (const Error &e) {
    throw Error(e.code(), e.message(), line);
  }
  return r;
}

void ValidateScript(const UtteranceRecord &r, int line) {
  if (r.transcription.find_first_not_of(" \t\r\n") == std::string::npos)
    throw Error(ErrorCode::kEmptyTranscript, "record '" + r.id + "' has no text",
                line);
  bool latin = false, deva = false;
  for (const ScriptSpan &s : SegmentScripts(r.transcription)) {
    latin |= s.script == Script::kLatin;
    deva |= s.script == Script::kDevanagari;
  }
  if (r.language == Language::kHindi && !deva)
    throw Error(ErrorCode::kScriptMismatch,
                "record '" + r.id + "' is hindi but has no Devanagari text", line);
  if (r.language == Language::kMixed && !(deva && latin))
    throw Error(ErrorCode::kScriptMismatch,
                "record '" + r.id + "' is mixed but lacks one of the scripts",
                line);
}

std::vector<UtteranceRecord> ParseManifest(std::string_view text,
                                           const std::filesystem::path &root,
                                           bool check_audio) {
  std::vector<UtteranceRecord> records;
  std::set<std::string, std::less<>> ids;
  std::size_t pos = 0;
  int line = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (row.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    UtteranceRecord r = RecordFromJsonLine(row, line);
    if (!ids.insert(r.id).second)
      throw Error(ErrorCode::kDuplicateId, "id '" + r.id + "' already used", line);
    const std::filesystem::path audio(r.audio_path);
    const auto normal = audio.lexically_normal();
    if (r.audio_path.empty() || audio.is_absolute() || audio.has_root_name() ||
        (!normal.empty() && *normal.begin() == ".."))
      throw Error(ErrorCode::kDanglingAudioPath,
                  "audio_path '" + r.audio_path +
                      "' must be relative to the manifest directory",
                  line);
    if (check_audio && !std::filesystem::is_regular_file(root / audio))
      throw Error(ErrorCode::kDanglingAudioPath,
                  "audio file '" + (root / audio).string() + "' does not exist",
                  line);
    ValidateScript(r, line);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<UtteranceRecord> LoadManifest(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return ParseManifest(text, path.parent_path(), true);
}

std::string SerializeManifest(const std::vector<UtteranceRecord> &records) {
  std::string out;
  for (const auto &r : records) {
    out += RecordToJsonLine(r);
    out += '\n';
  }
  return out;
}

void WriteManifest(const std::vector<UtteranceRecord> &records,
                   const std::filesystem::path &path) {
  const std::string text = SerializeManifest(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

std::filesystem::path ResolveAudio(const std::filesystem::path &manifest_path,
                                   const UtteranceRecord &record) {
  return manifest_path.parent_path() / record.audio_path;
}

std::vector<std::string> PairingDiagnostics::flags() const {
  std::vector<std::string> out;
  if (duration_out_of_range) out.push_back("duration");
  if (rate_out_of_range) out.push_back("speaking_rate");
  if (clipped) out.push_back("clipping");
  if (silent) out.push_back("silence");
  return out;
}

PairingDiagnostics ValidatePairing(const UtteranceRecord &record,
                                   const AudioBuffer &buf) {
  PairingDiagnostics d;
  d.duration_s = buf.duration_seconds();
  d.duration_out_of_range = d.duration_s < kMinDurationS || d.duration_s > kMaxDurationS;
  try {
    d.speaking_rate = SpeakingRate(record.transcription, d.duration_s, record.language);
    d.rate_out_of_range = d.speaking_rate < kMinRate || d.speaking_rate > kMaxRate;
  } catch (const Error &) {
    d.rate_out_of_range = true;
  }
  std::size_t clipped = 0;
  for (float s : buf.samples)
    if (std::fabs(s) >= kClipLevel) ++clipped;
  d.clipped_fraction =
      buf.samples.empty() ? 0.0 : static_cast<double>(clipped) / buf.samples.size();
  d.clipped = d.clipped_fraction >= kClipFraction;
  d.silent = IsAllSilent(buf);
  return d;
}

}  // namespace swara
