// tests/test_report.cc

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

#include <charconv>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "swara/error.h"
#include "swara/report.h"
#include "test_util.h"

namespace swara {
namespace {

using testing::ThrownCode;

UtteranceMetrics Metrics(const std::string &id, const std::string &lang,
                         const std::string &emo, double base) {
  UtteranceMetrics m;
  m.id = id;
  m.language = lang;
  m.emotion = emo;
  m.wer = base / 100.0;
  m.mcd_db = 4.0 + base;
  m.stoi = 0.5 + base / 100.0;
  m.spectral_centroid_hz = 1000.0 + base;
  m.mfcc_std = 10.0 + base;
  m.zcr = 0.05 + base / 1000.0;
  m.energy = 0.1 + base / 100.0;
  m.duration_s = 2.0 + base;
  return m;
}

std::vector<UtteranceMetrics> FourConfigurations() {
  return {Metrics("a", "indian-english", "neutral", 1), Metrics("b", "hindi", "neutral", 2),
          Metrics("c", "indian-english", "formal", 3), Metrics("d", "hindi", "excited", 4),
          Metrics("e", "hindi", "excited", 6)};
}

std::size_t CountLines(const std::string &s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST_SUITE("report") {

TEST_CASE("a single-utterance group equals that utterance") {
  const UtteranceMetrics m = Metrics("x", "hindi", "neutral", 7);
  const EvalReport r = BuildReport({m});
  REQUIRE(r.rows.size() == 1);
  const ReportRow &row = r.rows[0];
  CHECK(row.n_utterances == 1);
  CHECK(row.wer == *m.wer);
  CHECK(row.mcd_db == *m.mcd_db);
  CHECK(row.stoi == *m.stoi);
  CHECK(row.mean_spectral_centroid == *m.spectral_centroid_hz);
  CHECK(row.mfcc_std == *m.mfcc_std);
  CHECK(row.mean_zcr == *m.zcr);
  CHECK(row.mean_energy == *m.energy);
  CHECK(row.duration_s == *m.duration_s);
  CHECK_FALSE(row.pesq.has_value());
}

TEST_CASE("group values are arithmetic means") {
  UtteranceMetrics a = Metrics("a", "hindi", "neutral", 0), b = Metrics("b", "hindi", "neutral", 0);
  a.energy = 0.2;
  b.energy = 0.4;
  a.pesq = 3.0;
  const ReportRow row = BuildReport({a, b}).rows.at(0);
  CHECK(row.mean_energy == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(row.n_utterances == 2);
  // pesq averages over the utterances that carry it.
  CHECK(row.pesq == 3.0);
}

TEST_CASE("four configurations give four sorted rows") {
  const EvalReport r = BuildReport(FourConfigurations());
  REQUIRE(r.rows.size() == 4);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"hindi", "excited"}, {"hindi", "neutral"},
      {"indian-english", "formal"}, {"indian-english", "neutral"}};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::pair(r.rows[i].language, r.rows[i].emotion) == expected[i]);
  CHECK(r.rows[0].n_utterances == 2);
  CHECK(r.rows[0].duration_s == doctest::Approx(7.0));

  const std::string csv = r.ToCsv();
  std::string header;
  for (std::size_t i = 0; i < kReportColumns.size(); ++i)
    header += (i ? "," : "") + std::string(kReportColumns[i]);
  CHECK(csv.substr(0, csv.find('\n')) == header);
  CHECK(CountLines(csv) == 5);
  // Input order does not matter.
  auto shuffled = FourConfigurations();
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(BuildReport(shuffled).ToCsv() == csv);
}

TEST_CASE("missing metrics and mismatched ids") {
  auto ms = FourConfigurations();
  ms[2].stoi.reset();
  try {
    BuildReport(ms);
    FAIL("expected MissingMetric");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingMetric);
    CHECK(e.message().find("'c'") != std::string::npos);
  }

  UtteranceRecord rec;
  rec.id = "a";
  rec.language = Language::kHindi;
  rec.emotion = EmotionLabel::kSad;
  UtteranceMetrics m = Metrics("a", "", "", 1);
  const EvalReport joined = BuildReport({rec}, {m});
  REQUIRE(joined.rows.size() == 1);
  CHECK(joined.rows[0].language == "hindi");
  CHECK(joined.rows[0].emotion == "sad");

  UtteranceRecord other = rec;
  other.id = "z";
  CHECK(ThrownCode([&] { BuildReport({rec, other}, {m}); }) == ErrorCode::kMissingMetric);
  CHECK(ThrownCode([&] { BuildReport({rec}, {m, Metrics("q", "", "", 1)}); }) ==
        ErrorCode::kIdMismatch);
}

TEST_CASE("json round-trip and long format") {
  auto ms = FourConfigurations();
  ms[0].pesq = 2.5;
  const EvalReport r = BuildReport(ms);
  const EvalReport back = EvalReport::FromJson(r.ToJson());
  CHECK(back.ToCsv() == r.ToCsv());
  CHECK(back.ToJson() == r.ToJson());

  const std::string long_csv = r.ToLongCsv();
  CHECK(long_csv.substr(0, long_csv.find('\n')) == "language,emotion,metric,value");
  // Nine metric lines per row (n_utterances included) plus one pesq line.
  std::set<std::string> metrics;
  std::istringstream in(long_csv);
  std::string line;
  std::getline(in, line);
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto a = line.find(',', line.find(',') + 1);
    metrics.insert(line.substr(a + 1, line.find(',', a + 1) - a - 1));
  }
  CHECK(metrics.count("wer") == 1);
  CHECK(metrics.count("pesq") == 1);
  CHECK(lines == 4 * (metrics.size() - 1) + 1);

  CHECK(ThrownCode([] { EvalReport::FromJson("{oops"); }).has_value());
}

TEST_CASE("csv quotes fields that need it") {
  const EvalReport r = BuildReport({Metrics("a", "hindi, urban", "say \"hi\"", 1)});
  const std::string csv = r.ToCsv();
  CHECK(csv.find("\"hindi, urban\",\"say \"\"hi\"\"\",") != std::string::npos);
}

TEST_CASE("wer comparison against a baseline") {
  UtteranceMetrics base = Metrics("a", "hindi", "neutral", 0);
  UtteranceMetrics sys = base;
  base.wer = 0.154;
  sys.wer = 0.118;
  const auto rows = CompareWer(BuildReport({base}), BuildReport({sys}));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].baseline_wer == 0.154);
  CHECK(rows[0].system_wer == 0.118);
  REQUIRE(rows[0].relative_improvement.has_value());
  CHECK(*rows[0].relative_improvement == doctest::Approx(0.036 / 0.154));
  // 15.4% to 11.8% is a 23.4% relative reduction.
  CHECK(std::round(*rows[0].relative_improvement * 1000.0) / 10.0 == 23.4);
  CHECK(ComparisonCsv(rows).rfind("language,emotion,baseline_wer,system_wer,relative_improvement\n", 0) == 0);

  UtteranceMetrics perfect = base;
  perfect.wer = 0.0;
  const auto undefined = CompareWer(BuildReport({perfect}), BuildReport({sys}));
  CHECK_FALSE(undefined.at(0).relative_improvement.has_value());
  CHECK(ComparisonCsv(undefined).find("hindi,neutral,0,0.118,\n") != std::string::npos);

  UtteranceMetrics elsewhere = sys;
  elsewhere.emotion = "excited";
  CHECK(ThrownCode([&] { CompareWer(BuildReport({base}), BuildReport({elsewhere})); }) ==
        ErrorCode::kMissingMetric);
}

TEST_CASE("shortest round-trip number text") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -0.0, 5e-324, 0.3, 1e-4}) {
    const std::string text = FormatDouble(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK_MESSAGE(back == v, text);
  }
  CHECK(FormatDouble(0.1) == "0.1");
  CHECK(FormatDouble(2.0) == "2");
  CHECK(FormatDouble(0.1 + 0.2) == "0.30000000000000004");
}

TEST_CASE("utterance evaluation against itself and a known tone") {
  const AudioBuffer tone = synth::Sine(1000.0, 0.5, 2.0, 16000);
  const UtteranceMetrics self = EvaluateUtterance("a b c", tone, "A, b c.", tone);
  CHECK(*self.wer == 0.0);
  CHECK(*self.mcd_db == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(*self.stoi >= 0.99);
  CHECK(*self.duration_s == 2.0);
  CHECK(*self.spectral_centroid_hz == doctest::Approx(1000.0).epsilon(0.02));
  CHECK(*self.zcr == doctest::Approx(2000.0 / 16000.0).epsilon(0.05));
  CHECK(*self.energy == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(0.02));
  CHECK(*self.mfcc_std >= 0.0);
  CHECK_FALSE(self.pesq.has_value());

  const AudioBuffer other = synth::Sine(1000.0, 0.5, 2.0, 22050);
  CHECK(ThrownCode([&] { EvaluateUtterance("a", tone, "a", other); }) ==
        ErrorCode::kRateMismatch);
}

}  // TEST_SUITE

}  // namespace
}  // namespace swara
