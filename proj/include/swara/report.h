// swara/report.h

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

#ifndef SWARA_REPORT_H_
#define SWARA_REPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swara/audio_io.h"
#include "swara/manifest.h"

namespace swara {

// Per-utterance scores. language and emotion are free group names so that
// configurations outside the manifest vocabulary ("formal", "excited") can
// be reported too.
struct UtteranceMetrics {
  std::string id;
  std::string language;
  std::string emotion;
  std::optional<double> wer;
  std::optional<double> mcd_db;
  std::optional<double> stoi;
  std::optional<double> spectral_centroid_hz;
  std::optional<double> mfcc_std;
  std::optional<double> zcr;
  std::optional<double> energy;
  std::optional<double> duration_s;
  std::optional<double> pesq;  // external, never computed here
};

/// Scores one synthesized (or degraded) utterance against its reference:
/// word WER between transcripts, DTW MCD over 13 MFCCs, STOI, and the
/// spectral summary of `hyp` (mean centroid, mean over coefficients of the
/// per-coefficient std of MFCCs, mean ZCR, mean RMS, duration). Both buffers
/// must share a sample rate.
UtteranceMetrics EvaluateUtterance(std::string_view ref_text,
                                   const AudioBuffer &ref,
                                   std::string_view hyp_text,
                                   const AudioBuffer &hyp);

inline constexpr std::array<std::string_view, 12> kReportColumns = {
    "language",   "emotion",  "n_utterances",           "wer",
    "mcd_db",     "stoi",     "mean_spectral_centroid", "mfcc_std",
    "mean_zcr",   "mean_energy", "duration_s",          "pesq"};

struct ReportRow {
  std::string language;
  std::string emotion;
  std::size_t n_utterances = 0;
  double wer = 0.0;
  double mcd_db = 0.0;
  double stoi = 0.0;
  double mean_spectral_centroid = 0.0;
  double mfcc_std = 0.0;
  double mean_zcr = 0.0;
  double mean_energy = 0.0;
  double duration_s = 0.0;
  std::optional<double> pesq;  // mean over utterances that carry it
};

struct EvalReport {
  std::vector<ReportRow> rows;

  /// Header kReportColumns, one line per row; a missing pesq is empty.
  std::string ToCsv() const;
  /// {"columns": [...], "rows": [{column: value, ...}, ...]}
  std::string ToJson() const;
  /// language,emotion,metric,value; one line per row and present metric.
  std::string ToLongCsv() const;
  static EvalReport FromJson(std::string_view json);
};

/// Arithmetic means per (language, emotion), rows sorted by language then
/// emotion. Throws kMissingMetric naming the first utterance lacking any
/// computed metric.
EvalReport BuildReport(const std::vector<UtteranceMetrics> &metrics);

/// Same, with the group names taken from each id's manifest record. Throws
/// kMissingMetric for a manifest id with no metrics and kIdMismatch for
/// metrics whose id is not in the manifest.
EvalReport BuildReport(const std::vector<UtteranceRecord> &manifest,
                       const std::vector<UtteranceMetrics> &metrics);

struct WerComparison {
  std::string language;
  std::string emotion;
  double baseline_wer = 0.0;
  double system_wer = 0.0;
  // (baseline - system) / baseline; unset when the baseline WER is 0.
  std::optional<double> relative_improvement;
};

/// Pairs rows by group. Throws kMissingMetric when a group is absent from
/// either report. The CSV leaves an unset improvement empty.
std::vector<WerComparison> CompareWer(const EvalReport &baseline,
                                      const EvalReport &system);
std::string ComparisonCsv(const std::vector<WerComparison> &rows);

/// Shortest decimal text that reads back as the same double.
std::string FormatDouble(double v);

}  // namespace swara

#endif  // SWARA_REPORT_H_
