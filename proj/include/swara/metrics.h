// swara/metrics.h

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

#ifndef SWARA_METRICS_H_
#define SWARA_METRICS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swara/audio_io.h"
#include "swara/dsp.h"
#include "swara/matrix.h"

namespace swara {

struct EditCounts {
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;

  int total() const { return substitutions + insertions + deletions; }
  friend bool operator==(const EditCounts &, const EditCounts &) = default;
};

/// Unit-cost Levenshtein alignment. Among minimal alignments the backtrace
/// (from the end) prefers a diagonal step, then an insertion, then a
/// deletion.
EditCounts EditDistance(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp);

enum class Tokenizer { kWord, kChar };

/// Lowercases ASCII letters, removes ASCII punctuation, collapses runs of
/// whitespace to one space and trims. Non-ASCII text is kept as is.
std::string NormalizeText(std::string_view text);

/// Tokens of the normalized text: whitespace-separated words, or code points
/// with spaces dropped.
std::vector<std::string> Tokenize(std::string_view text, Tokenizer tokenizer);

/// (S + I + D) / reference length. Throws kEmptyReference.
double Wer(std::string_view ref, std::string_view hyp,
           Tokenizer tokenizer = Tokenizer::kWord);

/// (baseline - system) / baseline. Throws kInvalidArgument unless
/// baseline > 0.
double RelativeImprovement(double baseline, double system);

struct DtwPath {
  std::vector<std::pair<std::size_t, std::size_t>> steps;  // (row, col)
  double cost = 0.0;  // summed in path order
};

/// Minimal-cost monotone path from (0, 0) to (n-1, m-1) with steps (1,0),
/// (0,1), (1,1). Ties prefer the diagonal, then (1,0). Throws
/// kInvalidArgument for an empty or negative/non-finite matrix.
DtwPath DtwAlign(const Matrix &cost);

/// Mean of (10 / ln 10) * sqrt(2 * sum_{i>=1} (c_i - c'_i)^2) over aligned
/// frame pairs. With `use_dtw`, frames are paired along DtwAlign of the
/// Euclidean distance over coefficients 1..C-1; otherwise frame by frame.
/// Throws kCoeffMismatch, or kLengthMismatch when frame counts differ
/// without DTW.
double Mcd(const dsp::MelCepstra &ref, const dsp::MelCepstra &syn,
           bool use_dtw);

/// Short-time objective intelligibility, clamped to [0, 1]. Both signals go
/// to 10 kHz, are trimmed to the shorter length, and frames more than 40 dB
/// below the loudest clean frame are dropped from both. 256-sample Hann
/// frames (hop 128, 512-point FFT) are grouped into 15 one-third octave
/// bands from 150 Hz; band envelopes over 30-frame segments are scaled to the
/// clean energy, clipped at -15 dB SDR, and correlated.
///
/// Throws kRateMismatch for different rates and kSignalTooShort below 1 s or
/// when fewer than 30 frames survive silence removal.
double Stoi(const AudioBuffer &clean, const AudioBuffer &degraded);

}  // namespace swara

#endif  // SWARA_METRICS_H_
