// src/tagging.cc

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

#include "swara/tagging.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>

#include "json.hpp"
#include "swara/error.h"
#include "swara/manifest.h"

namespace swara {

std::string_view EmotionName(EmotionLabel e) {
  return kEmotionNames[static_cast<std::size_t>(e)];
}

EmotionLabel ParseEmotion(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionNames.size(); ++i)
    if (kEmotionNames[i] == name) return static_cast<EmotionLabel>(i);
  throw Error(ErrorCode::kUnknownEmotion,
              "unknown emotion label '" + std::string(name) + "'");
}

double FeatureValue(const FeatureTags &tags, std::string_view feature) {
  if (feature == kFeatureSpeakingRate) return tags.speaking_rate;
  if (feature == kFeatureSnr) return tags.snr_db;
  if (feature == kFeatureReverb) return tags.reverb_rt_ms;
  if (feature == kFeatureMonotony) return tags.monotony_semitones;
  if (feature == kFeatureEnergy) return tags.mean_energy;
  if (feature == kFeatureDuration) return tags.duration_s;
  throw Error(ErrorCode::kUnknownFeature,
              "unknown feature '" + std::string(feature) + "'");
}

// ---------------------------------------------------------------------------
// BinEdges

BinEdges BinEdges::Default() {
  BinEdges b;
  b.Set(kFeatureSpeakingRate,
        {{8, 11, 14, 17},
         {"very slowly", "slowly", "at a moderate speed", "fast", "very fast"}});
  b.Set(kFeatureSnr,
        {{15, 30, 45},
         {"very noisy", "quite noisy", "slightly noisy", "very clear"}});
  b.Set(kFeatureReverb,
        {{150, 300, 600}, {"no echo", "little echo", "some echo", "a lot of echo"}});
  b.Set(kFeatureMonotony,
        {{1, 2, 3.5, 5},
         {"very monotone", "quite monotone", "slightly expressive",
          "quite expressive", "very expressive"}});
  b.Set(kFeatureEnergy,
        {{0.02, 0.05, 0.1, 0.2},
         {"very quiet", "quiet", "moderately loud", "loud", "very loud"}});
  b.Set(kFeatureDuration,
        {{2, 5, 10}, {"very short", "short", "medium-length", "long"}});
  return b;
}

void BinEdges::Set(std::string_view feature, Bins bins) {
  if (std::find(kFeatureNames.begin(), kFeatureNames.end(), feature) ==
      kFeatureNames.end())
    throw Error(ErrorCode::kUnknownFeature,
                "bin edges for unknown feature '" + std::string(feature) + "'");
  for (std::size_t i = 0; i < bins.edges.size(); ++i) {
    if (!std::isfinite(bins.edges[i]))
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(feature) + ": edges must be finite");
    if (i > 0 && !(bins.edges[i] > bins.edges[i - 1]))
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(feature) + ": edges must be strictly increasing");
  }
  if (bins.labels.size() != bins.edges.size() + 1)
    throw Error(ErrorCode::kInvalidArgument,
                std::string(feature) + ": need exactly one more label than edges");
  bins_[std::string(feature)] = std::move(bins);
}

bool BinEdges::Has(std::string_view feature) const {
  return bins_.find(feature) != bins_.end();
}

const BinEdges::Bins &BinEdges::Get(std::string_view feature) const {
  auto it = bins_.find(feature);
  if (it == bins_.end())
    throw Error(ErrorCode::kUnknownFeature,
                "no bins for feature '" + std::string(feature) + "'");
  return it->second;
}

BinEdges BinEdges::FromJson(std::string_view json) {
  BinEdges b;
  try {
    auto doc = nlohmann::json::parse(json.begin(), json.end());
    if (doc.value("version", 0) != 1)
      throw Error(ErrorCode::kInvalidArgument, "unsupported bin-edges version");
    for (const auto &[name, spec] : doc.at("features").items()) {
      b.Set(name, {spec.at("edges").get<std::vector<double>>(),
                   spec.at("labels").get<std::vector<std::string>>()});
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError, std::string("bin edges: ") + e.what());
  }
  return b;
}

BinEdges BinEdges::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return FromJson(text);
}

std::string BinEdges::ToJson() const {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  nlohmann::ordered_json features = nlohmann::ordered_json::object();
  for (const auto &[name, bins] : bins_)
    features[name] = {{"edges", bins.edges}, {"labels", bins.labels}};
  doc["features"] = features;
  return doc.dump(2) + "\n";
}

std::size_t BinIndex(double value, const std::vector<double> &edges) {
  return static_cast<std::size_t>(
      std::upper_bound(edges.begin(), edges.end(), value) - edges.begin());
}

std::string BinFeature(double value, std::string_view feature,
                       const BinEdges &edges) {
  const auto &bins = edges.Get(feature);
  return bins.labels[BinIndex(value, bins.edges)];
}

// ---------------------------------------------------------------------------
// Feature estimators

double SpeakingRate(std::string_view transcription, double duration_s,
                    Language language) {
  if (!(duration_s > 0.0))
    throw Error(ErrorCode::kNonpositiveDuration, "duration must be positive");
  return CountPhonemes(transcription, language) / duration_s;
}

namespace {

constexpr double kSilencePower = 1e-8;  // -80 dBFS

std::vector<double> FramePowers(const AudioBuffer &buf, std::size_t frame,
                                std::size_t hop) {
  std::vector<double> powers;
  if (frame == 0 || hop == 0) return powers;
  for (std::size_t start = 0; start + frame <= buf.samples.size(); start += hop) {
    double acc = 0.0;
    for (std::size_t i = start; i < start + frame; ++i)
      acc += static_cast<double>(buf.samples[i]) * buf.samples[i];
    powers.push_back(acc / frame);
  }
  return powers;
}

std::size_t Samples(const AudioBuffer &buf, double seconds) {
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(seconds * buf.sample_rate)));
}

void RequireHalfSecond(const AudioBuffer &buf) {
  if (buf.sample_rate <= 0 || buf.duration_seconds() < 0.5)
    throw Error(ErrorCode::kSignalTooShort,
                "need at least 0.5 s of audio, got " +
                    std::to_string(buf.duration_seconds()) + " s");
}

// Linear-interpolated percentile of a sorted sequence, q in [0, 1].
double Percentile(const std::vector<double> &sorted, double q) {
  double pos = q * (sorted.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - lo;
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

bool IsAllSilent(const AudioBuffer &buf) {
  std::size_t frame = Samples(buf, 0.025);
  auto powers = FramePowers(buf, std::min(frame, buf.samples.size()),
                            std::min(frame, buf.samples.size()));
  return std::all_of(powers.begin(), powers.end(),
                     [](double p) { return p < kSilencePower; });
}

double EstimateSnr(const AudioBuffer &buf) {
  RequireHalfSecond(buf);
  const std::size_t frame = Samples(buf, 0.025);
  std::vector<double> powers = FramePowers(buf, frame, frame);
  if (std::all_of(powers.begin(), powers.end(),
                  [](double p) { return p < kSilencePower; }))
    throw Error(ErrorCode::kAllSilent, "every frame is below -80 dBFS");
  std::sort(powers.begin(), powers.end());
  const double loud = Percentile(powers, 0.9);
  const double quiet = Percentile(powers, 0.1);
  const double signal = loud - quiet;
  if (signal <= 0.0) return 0.0;
  if (quiet <= 0.0) return 60.0;
  return std::clamp(10.0 * std::log10(signal / quiet), 0.0, 60.0);
}

double EstimateReverb(const AudioBuffer &buf) {
  RequireHalfSecond(buf);
  const std::size_t frame = Samples(buf, 0.010);
  const std::size_t hop = Samples(buf, 0.005);
  const double hop_s = static_cast<double>(hop) / buf.sample_rate;
  std::vector<double> db = FramePowers(buf, frame, hop);
  for (double &p : db) p = 10.0 * std::log10(p + 1e-12);
  const std::size_t n = db.size();
  if (n < 3) return 0.0;
  const double loudest = *std::max_element(db.begin(), db.end());
  const double quietest = *std::min_element(db.begin(), db.end());

  std::vector<double> estimates;
  std::size_t p = 0;
  while (p + 1 < n) {
    const bool is_peak = (p == 0 || db[p] >= db[p - 1]) && db[p] > db[p + 1];
    const double target = db[p] - 20.0;
    if (!is_peak || db[p] < loudest - 40.0 || target < quietest + 10.0) {
      ++p;
      continue;
    }
    std::size_t j = p + 1;
    bool found = false;
    while (j < n && db[j] <= db[p]) {
      if (db[j] <= target) {
        found = true;
        break;
      }
      ++j;
    }
    if (!found) {
      ++p;
      continue;
    }
    // Least-squares slope (dB per second) over frames p..j.
    const double count = static_cast<double>(j - p + 1);
    double mean_t = 0.0, mean_e = 0.0;
    for (std::size_t k = p; k <= j; ++k) {
      mean_t += (k - p) * hop_s;
      mean_e += db[k];
    }
    mean_t /= count;
    mean_e /= count;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = p; k <= j; ++k) {
      const double dt = (k - p) * hop_s - mean_t;
      sxy += dt * (db[k] - mean_e);
      sxx += dt * dt;
    }
    const double slope = sxy / sxx;
    if (slope < 0.0) estimates.push_back(-60.0 / slope * 1000.0);
    p = j;
  }
  if (estimates.empty()) return 0.0;
  std::sort(estimates.begin(), estimates.end());
  const std::size_t mid = estimates.size() / 2;
  return estimates.size() % 2 ? estimates[mid]
                              : 0.5 * (estimates[mid - 1] + estimates[mid]);
}

double Monotony(const dsp::PitchTrack &track) {
  std::vector<double> voiced;
  for (std::size_t i = 0; i < track.f0_hz.size(); ++i)
    if (track.voiced[i] && track.f0_hz[i] > 0.0) voiced.push_back(track.f0_hz[i]);
  if (voiced.size() < 5)
    throw Error(ErrorCode::kInsufficientVoicing,
                std::to_string(voiced.size()) + " voiced frames, need at least 5");
  // Logs are taken of ratios to the first voiced frame. The spread about the
  // geometric mean is unchanged by that shift, and a transposition by any
  // power of two leaves every ratio, and so the result, bit-identical.
  std::vector<double> logs;
  for (double f : voiced) logs.push_back(std::log2(f / voiced.front()));
  const double center = std::accumulate(logs.begin(), logs.end(), 0.0) / logs.size();
  double var = 0.0;
  for (double l : logs) {
    const double semis = 12.0 * (l - center);
    var += semis * semis;
  }
  return std::sqrt(var / logs.size());
}

FeatureTags TagUtterance(std::string_view transcription, Language language,
                         const AudioBuffer &buf, const BinEdges &edges) {
  FeatureTags tags;
  tags.duration_s = buf.duration_seconds();
  tags.speaking_rate = SpeakingRate(transcription, tags.duration_s, language);
  tags.snr_db = EstimateSnr(buf);
  tags.reverb_rt_ms = EstimateReverb(buf);
  const dsp::FrameConfig frames = dsp::DefaultFrameConfig(buf.sample_rate);
  tags.monotony_semitones =
      Monotony(dsp::EstimateF0(buf, frames.frame_len, frames.hop));
  const auto rms = dsp::RmsEnergy(buf, frames.frame_len, frames.hop);
  tags.mean_energy = std::accumulate(rms.begin(), rms.end(), 0.0) / rms.size();
  for (const auto &[name, bins] : edges.features())
    tags.labels[name] = bins.labels[BinIndex(FeatureValue(tags, name), bins.edges)];
  return tags;
}

FeatureTags TagUtterance(const UtteranceRecord &record, const AudioBuffer &buf,
                         const BinEdges &edges) {
  return TagUtterance(record.transcription, record.language, buf, edges);
}

}  // namespace swara
