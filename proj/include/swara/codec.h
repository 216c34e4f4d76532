// swara/codec.h

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

#ifndef SWARA_CODEC_H_
#define SWARA_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "swara/audio_io.h"
#include "swara/matrix.h"

namespace swara {

// Residual vector quantizer over standardized frames.
//
// Frames are standardized per dimension with the training mean and
// population std (std 0 is stored as 1). Level 1 is plain k-means on the
// standardized frames. Every later level is k-means on the residuals of the
// levels before it, with centroid 0 pinned to the mean residual; because the
// pinned centroid alone never increases the mean squared residual, the
// training MSE is non-increasing level by level.
struct RvqCodebook {
  int dim = 0;
  int codebook_size = 0;  // K
  std::uint64_t train_seed = 0;
  std::vector<double> mean;
  std::vector<double> std;
  std::vector<Matrix> levels;  // each K x dim, standardized units

  int n_levels() const { return static_cast<int>(levels.size()); }

  friend bool operator==(const RvqCodebook &, const RvqCodebook &) = default;
};

struct RvqTrainOptions {
  int n_levels = 4;
  int codebook_size = 64;
  int max_iters = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;  // stop when every centroid moves less than this
  int jobs = 1;
};

struct RvqTrainReport {
  double initial_mse = 0.0;       // mean squared norm of standardized frames
  std::vector<double> level_mse;  // after each level, standardized units
  std::vector<int> iterations;    // Lloyd iterations per level
};

/// Throws kTooFewFrames (N < K), kDegenerateData (every frame identical with
/// K > 1) and kInvalidArgument for non-positive options. Output is
/// bit-identical for any `jobs`.
RvqCodebook TrainRvq(const Matrix &frames, const RvqTrainOptions &options,
                     RvqTrainReport *report = nullptr);

// Row-major [n_frames x n_levels] code indices.
struct CodeSequence {
  std::size_t n_frames = 0;
  int n_levels = 0;
  std::vector<std::int32_t> codes;

  std::int32_t at(std::size_t frame, int level) const {
    return codes[frame * n_levels + level];
  }
  friend bool operator==(const CodeSequence &, const CodeSequence &) = default;
};

/// Greedy per-level nearest centroid (squared Euclidean, lowest index wins
/// ties). Throws kDimensionMismatch.
CodeSequence EncodeGreedy(const Matrix &frames, const RvqCodebook &cb,
                          int jobs = 1);

/// EncodeGreedy, then per frame the greedy codes of the frame's own
/// reconstruction replace its codes until they stop changing (at most 8
/// rounds). Greedy coding alone can pick different codes for a decoded frame
/// than for the frame it came from; the settled codes are a fixed point, so
/// Encode(Decode(Encode(x))) == Encode(x). Almost every frame is already
/// fixed after the greedy pass. Throws kDimensionMismatch.
CodeSequence Encode(const Matrix &frames, const RvqCodebook &cb, int jobs = 1);

/// Sum of the selected centroids over the first `use_levels` levels (all when
/// negative), de-standardized. Throws kIndexOutOfRange or kDimensionMismatch
/// when the codes do not fit the codebook.
Matrix Decode(const CodeSequence &codes, const RvqCodebook &cb,
              int use_levels = -1);

/// Squared Euclidean distance, accumulated in a fixed order.
double SquaredDistance(std::span<const double> a, std::span<const double> b);

struct LevelStats {
  std::vector<std::size_t> histogram;  // size K
  double perplexity = 0.0;             // exp of natural-log entropy
  int dead_codes = 0;
};

/// Throws kEmptyCodes for an empty sequence.
std::vector<LevelStats> CodebookStats(const CodeSequence &codes,
                                      const RvqCodebook &cb);

// Binary layout, little-endian:
//   char[4]  "RVQB"
//   u32      version (1)
//   u32      dim
//   u32      K
//   u32      levels
//   u64      train seed
//   f64[dim] mean
//   f64[dim] std
//   f64[levels * K * dim] centroids, level-major then row-major
std::string SerializeCodebook(const RvqCodebook &cb);
/// Throws kCorruptCodebook on any layout violation.
RvqCodebook ParseCodebook(std::string_view bytes);
void SaveCodebook(const RvqCodebook &cb, const std::filesystem::path &path);
RvqCodebook LoadCodebook(const std::filesystem::path &path);

/// Log-mel frames used as codec input: default frame config for the rate,
/// 80 bands from 0 Hz to Nyquist, natural log with the 1e-10 floor.
Matrix LogMelFrames(const AudioBuffer &buf);

}  // namespace swara

#endif  // SWARA_CODEC_H_
