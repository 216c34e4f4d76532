// swara/tagging.h

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

#ifndef SWARA_TAGGING_H_
#define SWARA_TAGGING_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swara/audio_io.h"
#include "swara/dsp.h"
#include "swara/translit.h"

namespace swara {

struct UtteranceRecord;

enum class EmotionLabel {
  kWhisper,
  kEnunciation,
  kSad,
  kDefault,
  kLaughing,
  kConfused,
  kHappy,
  kEmphasis,
};

inline constexpr std::array<std::string_view, 8> kEmotionNames = {
    "whisper", "enunciation", "sad",   "default",
    "laughing", "confused",   "happy", "emphasis"};

std::string_view EmotionName(EmotionLabel e);
/// Exact, case-sensitive match against kEmotionNames; kUnknownEmotion
/// otherwise.
EmotionLabel ParseEmotion(std::string_view name);

// Feature names used in bin-edge files and in FeatureTags::labels.
inline constexpr std::string_view kFeatureSpeakingRate = "speaking_rate";
inline constexpr std::string_view kFeatureSnr = "snr_db";
inline constexpr std::string_view kFeatureReverb = "reverberation";
inline constexpr std::string_view kFeatureMonotony = "monotony";
inline constexpr std::string_view kFeatureEnergy = "energy";
inline constexpr std::string_view kFeatureDuration = "duration";
inline constexpr std::array<std::string_view, 6> kFeatureNames = {
    kFeatureSpeakingRate, kFeatureSnr,    kFeatureReverb,
    kFeatureMonotony,     kFeatureEnergy, kFeatureDuration};

struct FeatureTags {
  double speaking_rate = 0.0;       // phonemes per second
  double snr_db = 0.0;
  double reverb_rt_ms = 0.0;        // extrapolated 60 dB decay time
  double monotony_semitones = 0.0;  // std of voiced F0 about its geometric mean
  double mean_energy = 0.0;         // mean frame RMS
  double duration_s = 0.0;
  std::map<std::string, std::string> labels;  // feature name -> bin label

  friend bool operator==(const FeatureTags &, const FeatureTags &) = default;
};

/// The numeric value behind a feature name; kUnknownFeature otherwise.
double FeatureValue(const FeatureTags &tags, std::string_view feature);

/// Per-feature text bins. File format (JSON):
///   {"version": 1,
///    "features": {"snr_db": {"edges": [15, 30, 45],
///                            "labels": ["very noisy", "quite noisy",
///                                       "slightly noisy", "very clear"]},
///                 ...}}
/// Edges are finite and strictly increasing; there is one more label than
/// edges. Feature names must be among kFeatureNames.
class BinEdges {
 public:
  struct Bins {
    std::vector<double> edges;
    std::vector<std::string> labels;
  };

  BinEdges() = default;

  /// The shipped defaults (identical to data/bin_edges_v1.json).
  static BinEdges Default();
  static BinEdges FromJson(std::string_view json);
  static BinEdges Load(const std::filesystem::path &path);
  std::string ToJson() const;

  /// Throws kInvalidArgument on malformed bins, kUnknownFeature on a name
  /// outside kFeatureNames.
  void Set(std::string_view feature, Bins bins);
  void Erase(std::string_view feature) { bins_.erase(std::string(feature)); }
  bool Has(std::string_view feature) const;
  const Bins &Get(std::string_view feature) const;
  const std::map<std::string, Bins, std::less<>> &features() const {
    return bins_;
  }

 private:
  std::map<std::string, Bins, std::less<>> bins_;
};

/// Index of the bin holding `value`: the number of edges <= value, so a value
/// equal to an edge falls in the upper bin.
std::size_t BinIndex(double value, const std::vector<double> &edges);

/// Label for `value`; kUnknownFeature if the feature has no bins.
std::string BinFeature(double value, std::string_view feature,
                       const BinEdges &edges);

/// Phonemes per second. Throws kEmptyTranscript or kNonpositiveDuration.
double SpeakingRate(std::string_view transcription, double duration_s,
                    Language language);

/// True when every 25 ms frame is below -80 dBFS.
bool IsAllSilent(const AudioBuffer &buf);

/// Blind SNR from 25 ms frame powers: the 90th percentile frame is taken as
/// speech plus noise and the 10th percentile as noise, so the estimate is
/// 10*log10((P90 - P10) / P10), clamped to [0, 60] dB.
///
/// Throws kSignalTooShort below 0.5 s and kAllSilent for silent input.
double EstimateSnr(const AudioBuffer &buf);

/// Blind decay-time estimate in milliseconds. Log-energy of 10 ms frames
/// (5 ms hop) is scanned for offsets, a local peak followed by a fall of at
/// least 20 dB before the level climbs back above the peak. Each offset's
/// slope is fitted by least squares from the peak to the first frame 20 dB
/// down and extrapolated to 60 dB; the median over offsets is returned, or 0
/// when there are none. Only peaks within 40 dB of the loudest frame whose
/// 20 dB point stays 10 dB above the quietest frame are considered.
///
/// Throws kSignalTooShort below 0.5 s.
double EstimateReverb(const AudioBuffer &buf);

/// Standard deviation (population) of 12*log2(f0 / g) over voiced frames,
/// where g is the geometric mean of voiced f0. Throws kInsufficientVoicing
/// with fewer than 5 voiced frames.
double Monotony(const dsp::PitchTrack &track);

/// All FeatureTags fields, with labels for every feature present in `edges`.
FeatureTags TagUtterance(std::string_view transcription, Language language,
                         const AudioBuffer &buf, const BinEdges &edges);
FeatureTags TagUtterance(const UtteranceRecord &record, const AudioBuffer &buf,
                         const BinEdges &edges);

}  // namespace swara

#endif  // SWARA_TAGGING_H_
