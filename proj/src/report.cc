// src/report.cc

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

#include "swara/report.h"

#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "swara/dsp.h"
#include "swara/error.h"
#include "swara/metrics.h"

namespace swara {

std::string FormatDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

namespace {

double Mean(const std::vector<double> &v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double MeanColumnStd(const Matrix &m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) mean += m(r, c);
    mean /= m.rows();
    double var = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) var += (m(r, c) - mean) * (m(r, c) - mean);
    total += std::sqrt(var / m.rows());
  }
  return total / m.cols();
}

// Metric accessors in column order, shared by CSV, JSON and long output.
struct Column {
  std::string_view name;
  double ReportRow::*field;
};
constexpr std::array<Column, 8> kMeanColumns = {{
    {"wer", &ReportRow::wer},
    {"mcd_db", &ReportRow::mcd_db},
    {"stoi", &ReportRow::stoi},
    {"mean_spectral_centroid", &ReportRow::mean_spectral_centroid},
    {"mfcc_std", &ReportRow::mfcc_std},
    {"mean_zcr", &ReportRow::mean_zcr},
    {"mean_energy", &ReportRow::mean_energy},
    {"duration_s", &ReportRow::duration_s},
}};

constexpr std::array<std::optional<double> UtteranceMetrics::*, 8> kInputs = {
    &UtteranceMetrics::wer,
    &UtteranceMetrics::mcd_db,
    &UtteranceMetrics::stoi,
    &UtteranceMetrics::spectral_centroid_hz,
    &UtteranceMetrics::mfcc_std,
    &UtteranceMetrics::zcr,
    &UtteranceMetrics::energy,
    &UtteranceMetrics::duration_s,
};

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

UtteranceMetrics EvaluateUtterance(std::string_view ref_text,
                                   const AudioBuffer &ref,
                                   std::string_view hyp_text,
                                   const AudioBuffer &hyp) {
  if (ref.sample_rate != hyp.sample_rate)
    throw Error(ErrorCode::kRateMismatch,
                std::to_string(ref.sample_rate) + " Hz vs " +
                    std::to_string(hyp.sample_rate) + " Hz");
  UtteranceMetrics m;
  m.wer = Wer(ref_text, hyp_text);
  const dsp::FrameConfig frames = dsp::DefaultFrameConfig(hyp.sample_rate);
  const dsp::MelCepstra ref_cep = dsp::ComputeMfcc(ref, frames);
  const dsp::MelCepstra hyp_cep = dsp::ComputeMfcc(hyp, frames);
  m.mcd_db = Mcd(ref_cep, hyp_cep, true);
  m.stoi = Stoi(ref, hyp);
  m.spectral_centroid_hz =
      Mean(dsp::SpectralCentroid(dsp::Stft(hyp, frames.frame_len, frames.hop)));
  m.mfcc_std = MeanColumnStd(hyp_cep.coeffs);
  m.zcr = Mean(dsp::ZeroCrossingRate(hyp, frames.frame_len, frames.hop));
  m.energy = Mean(dsp::RmsEnergy(hyp, frames.frame_len, frames.hop));
  m.duration_s = hyp.duration_seconds();
  return m;
}

EvalReport BuildReport(const std::vector<UtteranceMetrics> &metrics) {
  struct Acc {
    std::size_t n = 0;
    std::array<double, kInputs.size()> sums{};
    double pesq_sum = 0.0;
    std::size_t pesq_n = 0;
  };
  std::map<std::pair<std::string, std::string>, Acc> groups;
  for (const UtteranceMetrics &m : metrics) {
    for (std::size_t c = 0; c < kInputs.size(); ++c)
      if (!(m.*kInputs[c]))
        throw Error(ErrorCode::kMissingMetric,
                    "utterance '" + m.id + "' has no " +
                        std::string(kMeanColumns[c].name));
    Acc &a = groups[{m.language, m.emotion}];
    ++a.n;
    for (std::size_t c = 0; c < kInputs.size(); ++c) a.sums[c] += *(m.*kInputs[c]);
    if (m.pesq) {
      a.pesq_sum += *m.pesq;
      ++a.pesq_n;
    }
  }
  EvalReport report;
  for (const auto &[key, a] : groups) {
    ReportRow row;
    row.language = key.first;
    row.emotion = key.second;
    row.n_utterances = a.n;
    for (std::size_t c = 0; c < kInputs.size(); ++c)
      row.*kMeanColumns[c].field = a.sums[c] / static_cast<double>(a.n);
    if (a.pesq_n) row.pesq = a.pesq_sum / static_cast<double>(a.pesq_n);
    report.rows.push_back(std::move(row));
  }
  return report;
}

EvalReport BuildReport(const std::vector<UtteranceRecord> &manifest,
                       const std::vector<UtteranceMetrics> &metrics) {
  std::map<std::string, const UtteranceMetrics *, std::less<>> by_id;
  for (const auto &m : metrics) by_id[m.id] = &m;
  std::map<std::string, const UtteranceRecord *, std::less<>> records;
  for (const auto &r : manifest) records[r.id] = &r;
  for (const auto &m : metrics)
    if (!records.count(m.id))
      throw Error(ErrorCode::kIdMismatch,
                  "metrics for '" + m.id + "' have no manifest record");
  std::vector<UtteranceMetrics> grouped;
  for (const auto &r : manifest) {
    auto it = by_id.find(r.id);
    if (it == by_id.end())
      throw Error(ErrorCode::kMissingMetric, "utterance '" + r.id + "' has no metrics");
    UtteranceMetrics m = *it->second;
    m.language = LanguageName(r.language);
    m.emotion = EmotionName(r.emotion);
    grouped.push_back(std::move(m));
  }
  return BuildReport(grouped);
}

std::string EvalReport::ToCsv() const {
  std::string out;
  for (std::size_t i = 0; i < kReportColumns.size(); ++i) {
    if (i) out += ',';
    out += kReportColumns[i];
  }
  out += '\n';
  for (const ReportRow &row : rows) {
    out += CsvField(row.language) + ',' + CsvField(row.emotion) + ',' +
           std::to_string(row.n_utterances);
    for (const Column &c : kMeanColumns) out += ',' + FormatDouble(row.*c.field);
    out += ',';
    if (row.pesq) out += FormatDouble(*row.pesq);
    out += '\n';
  }
  return out;
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json doc;
  doc["columns"] = kReportColumns;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow &row : rows) {
    nlohmann::ordered_json j;
    j["language"] = row.language;
    j["emotion"] = row.emotion;
    j["n_utterances"] = row.n_utterances;
    for (const Column &c : kMeanColumns) j[std::string(c.name)] = row.*c.field;
    j["pesq"] = row.pesq ? nlohmann::ordered_json(*row.pesq) : nullptr;
    arr.push_back(std::move(j));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string EvalReport::ToLongCsv() const {
  std::string out = "language,emotion,metric,value\n";
  for (const ReportRow &row : rows) {
    const std::string prefix = CsvField(row.language) + ',' + CsvField(row.emotion) + ',';
    for (const Column &c : kMeanColumns)
      out += prefix + std::string(c.name) + ',' + FormatDouble(row.*c.field) + '\n';
    if (row.pesq) out += prefix + "pesq," + FormatDouble(*row.pesq) + '\n';
  }
  return out;
}

EvalReport EvalReport::FromJson(std::string_view text) {
  EvalReport report;
  try {
    auto doc = nlohmann::json::parse(text.begin(), text.end());
    for (const auto &j : doc.at("rows")) {
      ReportRow row;
      row.language = j.at("language").get<std::string>();
      row.emotion = j.at("emotion").get<std::string>();
      row.n_utterances = j.at("n_utterances").get<std::size_t>();
      for (const Column &c : kMeanColumns)
        row.*c.field = j.at(std::string(c.name)).get<double>();
      if (j.contains("pesq") && !j.at("pesq").is_null())
        row.pesq = j.at("pesq").get<double>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError, std::string("report: ") + e.what());
  }
  return report;
}

std::vector<WerComparison> CompareWer(const EvalReport &baseline,
                                      const EvalReport &system) {
  std::map<std::pair<std::string, std::string>, double> base;
  for (const auto &r : baseline.rows) base[{r.language, r.emotion}] = r.wer;
  std::vector<WerComparison> out;
  for (const auto &r : system.rows) {
    auto it = base.find({r.language, r.emotion});
    if (it == base.end())
      throw Error(ErrorCode::kMissingMetric,
                  "baseline has no group " + r.language + "/" + r.emotion);
    WerComparison cmp{r.language, r.emotion, it->second, r.wer, std::nullopt};
    if (it->second > 0.0) cmp.relative_improvement = RelativeImprovement(it->second, r.wer);
    out.push_back(std::move(cmp));
    base.erase(it);
  }
  if (!base.empty())
    throw Error(ErrorCode::kMissingMetric,
                "system has no group " + base.begin()->first.first + "/" +
                    base.begin()->first.second);
  return out;
}

std::string ComparisonCsv(const std::vector<WerComparison> &rows) {
  std::string out = "language,emotion,baseline_wer,system_wer,relative_improvement\n";
  for (const auto &r : rows)
    out += CsvField(r.language) + ',' + CsvField(r.emotion) + ',' +
           FormatDouble(r.baseline_wer) + ',' + FormatDouble(r.system_wer) + ',' +
           (r.relative_improvement ? FormatDouble(*r.relative_improvement) : "") + '\n';
  return out;
}

}  // namespace swara
