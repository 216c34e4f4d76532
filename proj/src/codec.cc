// src/codec.cc

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

#include "swara/codec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <random>

#include "swara/dsp.h"
#include "swara/error.h"
#include "swara/parallel.h"

namespace swara {

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  // Four interleaved partial sums; the order is fixed so every caller sees
  // the same rounding.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  const std::size_t n = a.size();
  for (; i + 4 <= n; i += 4) {
    const double d0 = a[i] - b[i], d1 = a[i + 1] - b[i + 1];
    const double d2 = a[i + 2] - b[i + 2], d3 = a[i + 3] - b[i + 3];
    s0 += d0 * d0;
    s1 += d1 * d1;
    s2 += d2 * d2;
    s3 += d3 * d3;
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s0 += d * d;
  }
  return (s0 + s1) + (s2 + s3);
}

namespace {

struct Nearest {
  std::int32_t index = 0;
  double dist = 0.0;
};

Nearest FindNearest(std::span<const double> x, const Matrix &centroids) {
  Nearest best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < centroids.rows(); ++k) {
    const double d = SquaredDistance(x, centroids.row(k));
    if (d < best.dist) best = {static_cast<std::int32_t>(k), d};
  }
  return best;
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
double Uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// k-means++ seeding followed by Lloyd iterations on the rows of `x`. With
// `pinned`, centroid 0 is the mean of `x` and never moves.
Matrix KMeans(const Matrix &x, int k_count, bool pinned, std::uint64_t seed,
              int max_iters, double tolerance, int jobs, int *iterations) {
  const std::size_t n = x.rows(), dim = x.cols();
  const std::size_t k_total = static_cast<std::size_t>(k_count);
  std::mt19937_64 rng(seed);
  Matrix c(k_total, dim);
  std::vector<bool> used(n, false);
  std::size_t chosen = 0;

  if (pinned) {
    auto c0 = c.row(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < dim; ++d) c0[d] += x(i, d);
    for (double &v : c0) v /= static_cast<double>(n);
  } else {
    const auto first = std::min(
        n - 1, static_cast<std::size_t>(Uniform(rng) * static_cast<double>(n)));
    std::copy_n(x.row(first).begin(), dim, c.row(0).begin());
    used[first] = true;
  }
  chosen = 1;

  std::vector<double> d2(n);
  ParallelFor(n, jobs, [&](std::size_t i) {
    d2[i] = SquaredDistance(x.row(i), c.row(0));
  });
  for (; chosen < k_total; ++chosen) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = Uniform(rng) * total;
      double cum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cum += d2[i];
        if (d2[i] > 0.0) pick = i;  // last positive point guards rounding
        if (cum > target && d2[i] > 0.0) break;
      }
    } else {
      // Every point coincides with a centroid: reuse the first unused one.
      for (std::size_t i = 0; i < n && pick == n; ++i)
        if (!used[i]) pick = i;
      if (pick == n) pick = 0;
    }
    used[pick] = true;
    std::copy_n(x.row(pick).begin(), dim, c.row(chosen).begin());
    ParallelFor(n, jobs, [&](std::size_t i) {
      d2[i] = std::min(d2[i], SquaredDistance(x.row(i), c.row(chosen)));
    });
  }

  const std::size_t first_free = pinned ? 1 : 0;
  std::vector<Nearest> assign(n);
  int iter = 0;
  while (iter < max_iters) {
    ++iter;
    ParallelFor(n, jobs, [&](std::size_t i) { assign[i] = FindNearest(x.row(i), c); });

    // Sequential, index-ordered reduction keeps results independent of jobs.
    Matrix sums(k_total, dim);
    std::vector<std::size_t> counts(k_total, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto s = sums.row(assign[i].index);
      auto xi = x.row(i);
      for (std::size_t d = 0; d < dim; ++d) s[d] += xi[d];
      ++counts[assign[i].index];
    }
    Matrix next = c;
    for (std::size_t k = first_free; k < k_total; ++k) {
      if (counts[k] == 0) continue;
      auto dst = next.row(k);
      auto s = sums.row(k);
      for (std::size_t d = 0; d < dim; ++d)
        dst[d] = s[d] / static_cast<double>(counts[k]);
    }
    // Empty clusters take the point farthest from its centroid.
    for (std::size_t k = first_free; k < k_total; ++k) {
      if (counts[k] != 0) continue;
      std::size_t far = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (assign[i].dist > assign[far].dist) far = i;
      std::copy_n(x.row(far).begin(), dim, next.row(k).begin());
      assign[far].dist = 0.0;
    }
    double shift = 0.0;
    for (std::size_t k = 0; k < k_total; ++k)
      shift = std::max(shift, SquaredDistance(c.row(k), next.row(k)));
    c = std::move(next);
    if (std::sqrt(shift) < tolerance) break;
  }
  if (iterations) *iterations = iter;
  return c;
}

Matrix Standardize(const Matrix &frames, const RvqCodebook &cb) {
  Matrix z(frames.rows(), frames.cols());
  for (std::size_t i = 0; i < frames.rows(); ++i)
    for (std::size_t d = 0; d < frames.cols(); ++d)
      z(i, d) = (frames(i, d) - cb.mean[d]) / cb.std[d];
  return z;
}

}  // namespace

RvqCodebook TrainRvq(const Matrix &frames, const RvqTrainOptions &options,
                     RvqTrainReport *report) {
  if (options.n_levels < 1 || options.codebook_size < 1 || options.max_iters < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "levels, codebook size and max_iters must be positive");
  const std::size_t n = frames.rows(), dim = frames.cols();
  if (dim == 0 && n > 0)
    throw Error(ErrorCode::kInvalidArgument, "frames have zero dimension");
  if (n < static_cast<std::size_t>(options.codebook_size))
    throw Error(ErrorCode::kTooFewFrames,
                std::to_string(n) + " frames for " +
                    std::to_string(options.codebook_size) + " centroids");
  if (options.codebook_size > 1) {
    bool identical = true;
    for (std::size_t i = 1; i < n && identical; ++i)
      identical = std::equal(frames.row(i).begin(), frames.row(i).end(),
                             frames.row(0).begin());
    if (identical)
      throw Error(ErrorCode::kDegenerateData,
                  "all frames are identical; nothing to cluster");
  }

  RvqCodebook cb;
  cb.dim = static_cast<int>(dim);
  cb.codebook_size = options.codebook_size;
  cb.train_seed = options.seed;
  cb.mean.assign(dim, 0.0);
  cb.std.assign(dim, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d) cb.mean[d] += frames(i, d);
  for (double &m : cb.mean) m /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d) {
      const double dev = frames(i, d) - cb.mean[d];
      cb.std[d] += dev * dev;
    }
  for (double &s : cb.std) {
    s = std::sqrt(s / static_cast<double>(n));
    if (!(s > 0.0) || !std::isfinite(s)) s = 1.0;
  }

  Matrix residual = Standardize(frames, cb);
  const double denom = static_cast<double>(n) * static_cast<double>(dim);
  auto mse = [&] {
    double acc = 0.0;
    for (double v : residual.data()) acc += v * v;
    return acc / denom;
  };
  if (report) {
    *report = {};
    report->initial_mse = mse();
  }

  for (int level = 0; level < options.n_levels; ++level) {
    int iters = 0;
    Matrix c = KMeans(residual, options.codebook_size, level > 0,
                      options.seed + static_cast<std::uint64_t>(level),
                      options.max_iters, options.tolerance, options.jobs, &iters);
    ParallelFor(n, options.jobs, [&](std::size_t i) {
      auto r = residual.row(i);
      auto best = c.row(FindNearest(r, c).index);
      for (std::size_t d = 0; d < dim; ++d) r[d] -= best[d];
    });
    cb.levels.push_back(std::move(c));
    if (report) {
      report->level_mse.push_back(mse());
      report->iterations.push_back(iters);
    }
  }
  return cb;
}

namespace {

constexpr int kMaxSettleRounds = 8;

// z = (x - mean) / std, the same arithmetic as Standardize.
void StandardizeRow(std::span<const double> x, const RvqCodebook &cb,
                    std::span<double> z) {
  for (std::size_t d = 0; d < z.size(); ++d) z[d] = (x[d] - cb.mean[d]) / cb.std[d];
}

// Greedy nearest centroid level by level; `r` is consumed as the residual.
void GreedyRow(std::span<double> r, const RvqCodebook &cb, std::int32_t *codes) {
  for (int l = 0; l < cb.n_levels(); ++l) {
    const Matrix &c = cb.levels[l];
    const std::int32_t k = FindNearest(r, c).index;
    codes[l] = k;
    auto best = c.row(k);
    for (std::size_t d = 0; d < r.size(); ++d) r[d] -= best[d];
  }
}

// Sum of the first `levels` selected centroids, de-standardized. Indices must
// already be validated.
void ReconstructRow(const std::int32_t *codes, const RvqCodebook &cb,
                    int levels, std::span<double> y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (int l = 0; l < levels; ++l) {
    auto c = cb.levels[l].row(codes[l]);
    for (std::size_t d = 0; d < y.size(); ++d) y[d] += c[d];
  }
  for (std::size_t d = 0; d < y.size(); ++d) y[d] = y[d] * cb.std[d] + cb.mean[d];
}

CodeSequence EncodeImpl(const Matrix &frames, const RvqCodebook &cb, int jobs,
                        bool settle) {
  CodeSequence out;
  out.n_levels = cb.n_levels();
  if (frames.rows() == 0) return out;
  if (frames.cols() != static_cast<std::size_t>(cb.dim))
    throw Error(ErrorCode::kDimensionMismatch,
                "frames have dimension " + std::to_string(frames.cols()) +
                    ", codebook expects " + std::to_string(cb.dim));
  out.n_frames = frames.rows();
  out.codes.assign(out.n_frames * out.n_levels, 0);
  const std::size_t dim = frames.cols();
  const auto levels = static_cast<std::size_t>(out.n_levels);
  ParallelFor(out.n_frames, jobs, [&](std::size_t i) {
    std::vector<double> z(dim), y(dim);
    std::int32_t *codes = out.codes.data() + i * levels;
    StandardizeRow(frames.row(i), cb, z);
    GreedyRow(z, cb, codes);
    if (!settle) return;
    std::vector<std::int32_t> next(levels);
    for (int round = 0; round < kMaxSettleRounds; ++round) {
      ReconstructRow(codes, cb, out.n_levels, y);
      StandardizeRow(y, cb, z);
      GreedyRow(z, cb, next.data());
      if (std::equal(next.begin(), next.end(), codes)) break;
      std::copy(next.begin(), next.end(), codes);
    }
  });
  return out;
}

}  // namespace

CodeSequence EncodeGreedy(const Matrix &frames, const RvqCodebook &cb, int jobs) {
  return EncodeImpl(frames, cb, jobs, false);
}

CodeSequence Encode(const Matrix &frames, const RvqCodebook &cb, int jobs) {
  return EncodeImpl(frames, cb, jobs, true);
}

Matrix Decode(const CodeSequence &codes, const RvqCodebook &cb, int use_levels) {
  if (codes.n_levels != cb.n_levels() ||
      codes.codes.size() != codes.n_frames * codes.n_levels)
    throw Error(ErrorCode::kDimensionMismatch,
                "code sequence has " + std::to_string(codes.n_levels) +
                    " levels, codebook has " + std::to_string(cb.n_levels()));
  const int levels =
      use_levels < 0 ? cb.n_levels() : std::min(use_levels, cb.n_levels());
  Matrix out(codes.n_frames, static_cast<std::size_t>(cb.dim));
  for (std::size_t i = 0; i < codes.n_frames; ++i) {
    for (int l = 0; l < codes.n_levels; ++l) {
      const std::int32_t k = codes.at(i, l);
      if (k < 0 || k >= cb.codebook_size)
        throw Error(ErrorCode::kIndexOutOfRange,
                    "code " + std::to_string(k) + " at frame " +
                        std::to_string(i) + " level " + std::to_string(l));
    }
    ReconstructRow(codes.codes.data() + i * codes.n_levels, cb, levels, out.row(i));
  }
  return out;
}

std::vector<LevelStats> CodebookStats(const CodeSequence &codes,
                                      const RvqCodebook &cb) {
  if (codes.n_frames == 0)
    throw Error(ErrorCode::kEmptyCodes, "no codes to summarize");
  std::vector<LevelStats> out(codes.n_levels);
  const double n = static_cast<double>(codes.n_frames);
  for (int l = 0; l < codes.n_levels; ++l) {
    LevelStats &s = out[l];
    s.histogram.assign(cb.codebook_size, 0);
    for (std::size_t i = 0; i < codes.n_frames; ++i) {
      const std::int32_t k = codes.at(i, l);
      if (k < 0 || k >= cb.codebook_size)
        throw Error(ErrorCode::kIndexOutOfRange, "code " + std::to_string(k));
      ++s.histogram[k];
    }
    double entropy = 0.0;
    for (std::size_t count : s.histogram) {
      if (count == 0) {
        ++s.dead_codes;
        continue;
      }
      const double p = static_cast<double>(count) / n;
      entropy -= p * std::log(p);
    }
    s.perplexity = std::exp(entropy);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

constexpr char kMagic[4] = {'R', 'V', 'Q', 'B'};
constexpr std::uint32_t kVersion = 1;

void PutU32(std::string *out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void PutU64(std::string *out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void PutF64(std::string *out, double v) { PutU64(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}
  std::uint64_t Get(int width) {
    if (pos_ + width > bytes_.size())
      throw Error(ErrorCode::kCorruptCodebook, "truncated codebook");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    pos_ += width;
    return v;
  }
  double GetF64() { return std::bit_cast<double>(Get(8)); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string SerializeCodebook(const RvqCodebook &cb) {
  std::string out(kMagic, 4);
  PutU32(&out, kVersion);
  PutU32(&out, static_cast<std::uint32_t>(cb.dim));
  PutU32(&out, static_cast<std::uint32_t>(cb.codebook_size));
  PutU32(&out, static_cast<std::uint32_t>(cb.n_levels()));
  PutU64(&out, cb.train_seed);
  for (double v : cb.mean) PutF64(&out, v);
  for (double v : cb.std) PutF64(&out, v);
  for (const Matrix &level : cb.levels)
    for (double v : level.data()) PutF64(&out, v);
  return out;
}

RvqCodebook ParseCodebook(std::string_view bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(ErrorCode::kCorruptCodebook, "missing RVQB magic");
  Reader in(bytes.substr(4));
  if (in.Get(4) != kVersion)
    throw Error(ErrorCode::kCorruptCodebook, "unsupported codebook version");
  RvqCodebook cb;
  const std::uint64_t dim = in.Get(4), k = in.Get(4), levels = in.Get(4);
  cb.train_seed = in.Get(8);
  if (dim == 0 || k == 0 || levels == 0)
    throw Error(ErrorCode::kCorruptCodebook, "zero-sized codebook");
  if (in.remaining() != 8 * (2 * dim + levels * k * dim))
    throw Error(ErrorCode::kCorruptCodebook, "payload size does not match header");
  cb.dim = static_cast<int>(dim);
  cb.codebook_size = static_cast<int>(k);
  cb.mean.resize(dim);
  cb.std.resize(dim);
  for (double &v : cb.mean) v = in.GetF64();
  for (double &v : cb.std) v = in.GetF64();
  for (std::uint64_t l = 0; l < levels; ++l) {
    Matrix c(k, dim);
    for (double &v : c.data()) v = in.GetF64();
    cb.levels.push_back(std::move(c));
  }
  auto finite = [](double v) { return std::isfinite(v); };
  for (std::size_t d = 0; d < dim; ++d)
    if (!finite(cb.mean[d]) || !finite(cb.std[d]) || !(cb.std[d] > 0.0))
      throw Error(ErrorCode::kCorruptCodebook, "bad normalization statistics");
  for (const Matrix &c : cb.levels)
    if (!std::all_of(c.data().begin(), c.data().end(), finite))
      throw Error(ErrorCode::kCorruptCodebook, "non-finite centroid");
  return cb;
}

void SaveCodebook(const RvqCodebook &cb, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  const std::string bytes = SerializeCodebook(cb);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

RvqCodebook LoadCodebook(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return ParseCodebook(bytes);
}

Matrix LogMelFrames(const AudioBuffer &buf) {
  const dsp::FrameConfig frames = dsp::DefaultFrameConfig(buf.sample_rate);
  const dsp::Spectrogram spec = dsp::Stft(buf, frames.frame_len, frames.hop);
  Matrix mel = dsp::MelSpectrogram(spec, dsp::kDefaultMels, 0.0,
                                   buf.sample_rate / 2.0);
  for (double &v : mel.data()) v = std::log(v + dsp::kLogFloor);
  return mel;
}

}  // namespace swara
