// tests/test_manifest.cc

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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "swara/error.h"
#include "swara/manifest.h"
#include "test_util.h"

namespace swara {
namespace {

using testing::TempDir;
using testing::ThrownCode;

UtteranceRecord Record(const std::string &id, const std::string &text, Language lang) {
  UtteranceRecord r;
  r.id = id;
  r.audio_path = "audio/" + id + ".wav";
  r.transcription = text;
  r.language = lang;
  r.speaker = "Akshansh";
  return r;
}

std::vector<UtteranceRecord> ThreeRecords() {
  std::vector<UtteranceRecord> v = {
      Record("u1", "नमस्ते आप कैसे हैं", Language::kHindi),
      Record("u2", "hello \"quoted\" world\\", Language::kEnglish),
      Record("u3", "Namaste, let's talk about मौसम", Language::kMixed)};
  v[1].emotion = EmotionLabel::kHappy;
  v[1].speaker = "";
  FeatureTags t;
  t.speaking_rate = 0.1 + 0.2;  // not representable in few digits
  t.snr_db = 1.0 / 3.0;
  t.reverb_rt_ms = 123.456789012345678;
  t.monotony_semitones = std::numeric_limits<double>::min();
  t.mean_energy = 5e-324;
  t.duration_s = 2.0;
  t.labels = {{"snr_db", "very clear"}, {"speaking_rate", "slowly"}};
  v[2].tags = t;
  v[2].description = "Akshansh speaks देखो slowly.";
  return v;
}

// The 1-based line carried by the error `fn` throws, or -1.
int ThrownLine(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.line();
  }
  return -1;
}

TEST_SUITE("manifest") {

TEST_CASE("three records round-trip through a file") {
  TempDir dir;
  std::filesystem::create_directories(dir / "audio");
  const auto records = ThreeRecords();
  for (const auto &r : records) testing::WriteFile(dir.path() / r.audio_path, "x");
  WriteManifest(records, dir / "m.jsonl");
  const auto back = LoadManifest(dir / "m.jsonl");
  CHECK(back == records);
  // Rewriting the loaded records gives the same bytes.
  CHECK(SerializeManifest(back) == testing::ReadFile(dir / "m.jsonl"));
}

TEST_CASE("devanagari is stored as raw utf-8") {
  const std::string line = RecordToJsonLine(ThreeRecords()[0]);
  CHECK(line.find("नमस्ते आप कैसे हैं") != std::string::npos);
  CHECK(line.find("\\u") == std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("field order on write is fixed") {
  const std::string line = RecordToJsonLine(ThreeRecords()[2]);
  std::size_t prev = 0;
  for (const char *key : {"\"id\"", "\"audio_path\"", "\"transcription\"", "\"language\"",
                          "\"emotion\"", "\"speaker\"", "\"tags\"", "\"description\""}) {
    const std::size_t at = line.find(key);
    REQUIRE(at != std::string::npos);
    CHECK(at >= prev);
    prev = at;
  }
}

TEST_CASE("empty and blank manifests load as empty") {
  TempDir dir;
  testing::WriteFile(dir / "empty.jsonl", "");
  CHECK(LoadManifest(dir / "empty.jsonl").empty());
  CHECK(ParseManifest("\n  \n\r\n", dir.path(), true).empty());
}

TEST_CASE("load errors carry the line number") {
  const auto r = Record("u1", "hello there", Language::kEnglish);
  const std::string line = RecordToJsonLine(r);

  const std::string dup = line + "\n" + line + "\n";
  CHECK(ThrownCode([&] { ParseManifest(dup, ".", false); }) == ErrorCode::kDuplicateId);
  CHECK(ThrownLine([&] { ParseManifest(dup, ".", false); }) == 2);

  const std::string with_blank = line + "\n\n{not json\n";
  CHECK(ThrownCode([&] { ParseManifest(with_blank, ".", false); }) == ErrorCode::kParseError);
  CHECK(ThrownLine([&] { ParseManifest(with_blank, ".", false); }) == 3);

  auto with = [](UtteranceRecord rec) { return RecordToJsonLine(rec) + "\n"; };
  auto hindi_latin = Record("h", "namaste", Language::kHindi);
  CHECK(ThrownCode([&] { ParseManifest(with(hindi_latin), ".", false); }) ==
        ErrorCode::kScriptMismatch);
  auto mixed_deva = Record("m", "नमस्ते", Language::kMixed);
  CHECK(ThrownCode([&] { ParseManifest(with(mixed_deva), ".", false); }) ==
        ErrorCode::kScriptMismatch);
  auto blank = Record("b", "   ", Language::kEnglish);
  CHECK(ThrownCode([&] { ParseManifest(with(blank), ".", false); }) ==
        ErrorCode::kEmptyTranscript);

  for (const std::string path : {"/etc/passwd", "../outside.wav", "a/../../b.wav", ""}) {
    auto rec = r;
    rec.audio_path = path;
    CHECK_MESSAGE(ThrownCode([&] { ParseManifest(with(rec), ".", false); }) ==
                      ErrorCode::kDanglingAudioPath,
                  path);
  }

  CHECK(ThrownCode([&] {
          ParseManifest(R"({"id":"x","audio_path":"a.wav","transcription":"hi",)"
                        R"("language":"english","emotion":"angry","speaker":""})",
                        ".", false);
        }) == ErrorCode::kUnknownEmotion);
  CHECK(ThrownCode([&] {
          ParseManifest(R"({"id":"x","audio_path":"a.wav","transcription":"hi",)"
                        R"("language":"french","emotion":"sad","speaker":""})",
                        ".", false);
        }) == ErrorCode::kUnknownLanguage);
  CHECK(ThrownCode([&] {
          ParseManifest(R"({"id":"x","audio_path":"a.wav","language":"english"})", ".", false);
        }) == ErrorCode::kParseError);
}

TEST_CASE("missing audio is dangling only when checked") {
  TempDir dir;
  const std::string text = RecordToJsonLine(Record("u1", "hello", Language::kEnglish)) + "\n";
  CHECK(ParseManifest(text, dir.path(), false).size() == 1);
  testing::WriteFile(dir / "m.jsonl", text);
  CHECK(ThrownCode([&] { LoadManifest(dir / "m.jsonl"); }) == ErrorCode::kDanglingAudioPath);
  CHECK(ThrownCode([&] { LoadManifest(dir / "absent.jsonl"); }) == ErrorCode::kIoError);
}

TEST_CASE("unwritable destinations raise io errors") {
  TempDir dir;
  CHECK(ThrownCode([&] { WriteManifest(ThreeRecords(), dir / "no/such/dir/m.jsonl"); }) ==
        ErrorCode::kIoError);
  CHECK(ThrownCode([&] { WriteManifest(ThreeRecords(), dir.path()); }) == ErrorCode::kIoError);
}

TEST_CASE("resolve audio joins against the manifest directory") {
  const auto r = Record("u1", "hello", Language::kEnglish);
  CHECK(ResolveAudio("/data/set/m.jsonl", r) == std::filesystem::path("/data/set/audio/u1.wav"));
}

AudioBuffer Bursts(double seconds) {
  AudioBuffer buf;
  buf.sample_rate = 16000;
  for (double v : synth::ToneBursts(seconds, 16000)) buf.samples.push_back(static_cast<float>(v));
  return buf;
}

TEST_CASE("pairing diagnostics") {
  const AudioBuffer clean = Bursts(2.0);
  const auto plain = Record("u", "this is a clear sentence", Language::kEnglish);
  const PairingDiagnostics ok = ValidatePairing(plain, clean);
  CHECK(ok.ok());
  CHECK(ok.flags().empty());
  CHECK(ok.duration_s == doctest::Approx(2.0));

  // 500 single-phoneme words in 2 s is 250 phonemes per second.
  std::string many;
  for (int i = 0; i < 500; ++i) many += i ? " a" : "a";
  const PairingDiagnostics fast =
      ValidatePairing(Record("u", many, Language::kEnglish), clean);
  CHECK(fast.speaking_rate == doctest::Approx(250.0));
  CHECK(fast.rate_out_of_range);
  CHECK(fast.flags() == std::vector<std::string>{"speaking_rate"});

  // A square wave driven past full scale: every sample sits at the rails.
  AudioBuffer square = clean;
  for (std::size_t t = 0; t < square.samples.size(); ++t)
    square.samples[t] = (t / 40) % 2 ? -1.0f : 1.0f;
  const PairingDiagnostics clip = ValidatePairing(plain, square);
  CHECK(clip.clipped);
  CHECK(clip.clipped_fraction == 1.0);
  CHECK(clip.flags() == std::vector<std::string>{"clipping"});

  // 0.1% is the threshold: one sample short of it does not flag.
  AudioBuffer edge = clean;
  const std::size_t needed = (edge.samples.size() + 999) / 1000;
  for (std::size_t k = 0; k + 1 < needed; ++k) edge.samples[k * 7] = 1.0f;
  CHECK_FALSE(ValidatePairing(plain, edge).clipped);
  edge.samples[5] = -1.0f;
  CHECK(ValidatePairing(plain, edge).clipped);

  AudioBuffer silence = clean;
  std::fill(silence.samples.begin(), silence.samples.end(), 0.0f);
  const PairingDiagnostics quiet = ValidatePairing(plain, silence);
  CHECK(quiet.silent);
  const std::vector<std::string> quiet_flags = quiet.flags();
  CHECK(std::find(quiet_flags.begin(), quiet_flags.end(), "silence") != quiet_flags.end());

  const PairingDiagnostics brief = ValidatePairing(Record("u", "hi", Language::kEnglish), Bursts(0.2));
  CHECK(brief.duration_out_of_range);

  // Diagnostics are a pure function of their inputs.
  CHECK(ValidatePairing(plain, square) == clip);
}

}  // TEST_SUITE

}  // namespace
}  // namespace swara
