// src/metrics.cc

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

#include "swara/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "swara/error.h"
#include "swara/fft.h"
#include "swara/utf8.h"

namespace swara {

// ---------------------------------------------------------------------------
// Edit distance and WER

EditCounts EditDistance(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  // d[i][j]: cost of aligning ref[0, i) with hyp[0, j).
  std::vector<int> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> int & { return d[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j - 1) + (ref[i - 1] != hyp[j - 1]),
                           at(i, j - 1) + 1, at(i - 1, j) + 1});

  EditCounts counts;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const int sub = ref[i - 1] != hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + sub) {
        counts.substitutions += sub;
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      ++counts.insertions;
      --j;
    } else {
      ++counts.deletions;
      --i;
    }
  }
  return counts;
}

std::string NormalizeText(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 0x80 && std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (c < 0x80 && std::ispunct(c)) continue;
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text, Tokenizer tokenizer) {
  const std::string norm = NormalizeText(text);
  std::vector<std::string> tokens;
  if (tokenizer == Tokenizer::kChar) {
    for (char32_t cp : utf8::Decode(norm))
      if (cp != U' ') tokens.push_back(utf8::Encode(cp));
    return tokens;
  }
  std::size_t start = 0;
  while (start < norm.size()) {
    std::size_t end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    tokens.push_back(norm.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

double Wer(std::string_view ref, std::string_view hyp, Tokenizer tokenizer) {
  const auto r = Tokenize(ref, tokenizer);
  if (r.empty())
    throw Error(ErrorCode::kEmptyReference, "reference has no tokens");
  return static_cast<double>(EditDistance(r, Tokenize(hyp, tokenizer)).total()) /
         static_cast<double>(r.size());
}

double RelativeImprovement(double baseline, double system) {
  if (!(baseline > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "baseline must be positive");
  return (baseline - system) / baseline;
}

// ---------------------------------------------------------------------------
// DTW and MCD

DtwPath DtwAlign(const Matrix &cost) {
  const std::size_t n = cost.rows(), m = cost.cols();
  if (n == 0 || m == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty DTW cost matrix");
  for (double c : cost.data())
    if (!std::isfinite(c) || c < 0.0)
      throw Error(ErrorCode::kInvalidArgument,
                  "DTW costs must be finite and non-negative");

  // acc(i, j) is accumulated from (0, 0) in path order, so it equals the
  // path-order sum of the path recovered below.
  Matrix acc(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == 0 && j == 0) {
        acc(i, j) = cost(i, j);
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      if (i > 0 && j > 0) best = acc(i - 1, j - 1);
      if (i > 0) best = std::min(best, acc(i - 1, j));
      if (j > 0) best = std::min(best, acc(i, j - 1));
      acc(i, j) = best + cost(i, j);
    }

  DtwPath path;
  path.cost = acc(n - 1, m - 1);
  std::size_t i = n - 1, j = m - 1;
  path.steps.push_back({i, j});
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const double diag = acc(i - 1, j - 1);
      const double up = acc(i - 1, j);
      const double left = acc(i, j - 1);
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    } else if (i > 0) {
      --i;
    } else {
      --j;
    }
    path.steps.push_back({i, j});
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

namespace {

double CepstralDistance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

double Mcd(const dsp::MelCepstra &ref, const dsp::MelCepstra &syn,
           bool use_dtw) {
  const Matrix &a = ref.coeffs, &b = syn.coeffs;
  if (a.cols() != b.cols())
    throw Error(ErrorCode::kCoeffMismatch,
                std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) +
                    " coefficients");
  if (a.rows() == 0 || b.rows() == 0)
    throw Error(ErrorCode::kLengthMismatch, "cepstra have no frames");
  const double scale = 10.0 / std::numbers::ln10 * std::numbers::sqrt2;
  double total = 0.0;
  std::size_t pairs = 0;
  if (!use_dtw) {
    if (a.rows() != b.rows())
      throw Error(ErrorCode::kLengthMismatch,
                  std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) +
                      " frames");
    for (std::size_t i = 0; i < a.rows(); ++i)
      total += scale * CepstralDistance(a.row(i), b.row(i));
    pairs = a.rows();
  } else {
    Matrix cost(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.rows(); ++j)
        cost(i, j) = CepstralDistance(a.row(i), b.row(j));
    const DtwPath path = DtwAlign(cost);
    for (const auto &[i, j] : path.steps) total += scale * cost(i, j);
    pairs = path.steps.size();
  }
  return total / static_cast<double>(pairs);
}

// ---------------------------------------------------------------------------
// STOI

namespace {

constexpr int kStoiRate = 10000;
constexpr int kStoiFrame = 256;
constexpr int kStoiHop = 128;
constexpr int kStoiFft = 512;
constexpr int kStoiBands = 15;
constexpr double kStoiMinFreq = 150.0;
constexpr int kStoiSegment = 30;
constexpr double kStoiBeta = -15.0;
constexpr double kStoiDynRange = 40.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Symmetric Hann of length frame + 2 with both zero end points dropped.
std::vector<double> InnerHann(int frame) {
  std::vector<double> w(frame);
  for (int n = 0; n < frame; ++n)
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (n + 1) / (frame + 1));
  return w;
}

// Frame starts 0, hop, ... strictly before len - frame.
std::size_t StoiFrameCount(std::size_t len) {
  if (len <= static_cast<std::size_t>(kStoiFrame)) return 0;
  return (len - kStoiFrame - 1) / kStoiHop + 1;
}

// Drops frames of both signals where the clean frame is more than the dynamic
// range below the loudest clean frame, then overlap-adds what is left.
void RemoveSilentFrames(std::vector<double> *x, std::vector<double> *y) {
  const auto w = InnerHann(kStoiFrame);
  const std::size_t frames = StoiFrameCount(x->size());
  std::vector<double> energy(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (int n = 0; n < kStoiFrame; ++n) {
      const double v = w[n] * (*x)[f * kStoiHop + n];
      acc += v * v;
    }
    energy[f] = 20.0 * std::log10(std::sqrt(acc) + kEps);
  }
  const double top =
      frames ? *std::max_element(energy.begin(), energy.end()) : 0.0;
  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < frames; ++f)
    if (top - kStoiDynRange - energy[f] < 0.0) keep.push_back(f);

  const std::size_t out_len =
      keep.empty() ? 0 : (keep.size() - 1) * kStoiHop + kStoiFrame;
  std::vector<double> xs(out_len, 0.0), ys(out_len, 0.0);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t src = keep[k] * kStoiHop, dst = k * kStoiHop;
    for (int n = 0; n < kStoiFrame; ++n) {
      xs[dst + n] += w[n] * (*x)[src + n];
      ys[dst + n] += w[n] * (*y)[src + n];
    }
  }
  *x = std::move(xs);
  *y = std::move(ys);
}

// Band envelopes [bands x frames]: sqrt of the summed bin power per band.
Matrix ThirdOctaveEnvelopes(const std::vector<double> &x,
                            const std::vector<std::vector<int>> &band_bins) {
  const auto w = InnerHann(kStoiFrame);
  const std::size_t frames = StoiFrameCount(x.size());
  Matrix env(kStoiBands, frames);
  RealFft &fft = ThreadLocalFft(kStoiFft);
  std::vector<double> frame(kStoiFrame);
  std::vector<std::complex<double>> spec;
  for (std::size_t f = 0; f < frames; ++f) {
    for (int n = 0; n < kStoiFrame; ++n) frame[n] = w[n] * x[f * kStoiHop + n];
    fft.Forward(frame, &spec);
    for (int b = 0; b < kStoiBands; ++b) {
      double acc = 0.0;
      for (int k : band_bins[b]) acc += std::norm(spec[k]);
      env(b, f) = std::sqrt(acc);
    }
  }
  return env;
}

// Bin ranges [low, high) of each one-third octave band, with the band edges
// snapped to the nearest FFT bin.
std::vector<std::vector<int>> ThirdOctaveBins() {
  const int n_bins = kStoiFft / 2 + 1;
  auto nearest = [&](double hz) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * kStoiRate / kStoiFft;
      const double d = (f - hz) * (f - hz);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };
  std::vector<std::vector<int>> bins(kStoiBands);
  for (int b = 0; b < kStoiBands; ++b) {
    const int lo = nearest(kStoiMinFreq * std::pow(2.0, (2.0 * b - 1.0) / 6.0));
    const int hi = nearest(kStoiMinFreq * std::pow(2.0, (2.0 * b + 1.0) / 6.0));
    for (int k = lo; k < hi; ++k) bins[b].push_back(k);
  }
  return bins;
}

std::vector<double> ToStoiRate(const AudioBuffer &buf) {
  const AudioBuffer r = Resample(buf, kStoiRate);
  return {r.samples.begin(), r.samples.end()};
}

}  // namespace

double Stoi(const AudioBuffer &clean, const AudioBuffer &degraded) {
  if (clean.sample_rate != degraded.sample_rate)
    throw Error(ErrorCode::kRateMismatch,
                std::to_string(clean.sample_rate) + " Hz vs " +
                    std::to_string(degraded.sample_rate) + " Hz");
  const std::size_t len = std::min(clean.samples.size(), degraded.samples.size());
  if (clean.sample_rate <= 0 ||
      static_cast<double>(len) / clean.sample_rate < 1.0)
    throw Error(ErrorCode::kSignalTooShort, "STOI needs at least 1 s of audio");

  AudioBuffer a = clean, b = degraded;
  a.samples.resize(len);
  b.samples.resize(len);
  std::vector<double> x = ToStoiRate(a), y = ToStoiRate(b);
  RemoveSilentFrames(&x, &y);

  static const auto band_bins = ThirdOctaveBins();
  const Matrix xe = ThirdOctaveEnvelopes(x, band_bins);
  const Matrix ye = ThirdOctaveEnvelopes(y, band_bins);
  const std::size_t frames = xe.cols();
  if (frames < static_cast<std::size_t>(kStoiSegment))
    throw Error(ErrorCode::kSignalTooShort,
                "only " + std::to_string(frames) +
                    " non-silent frames; need 30 for one segment");

  const double clip = 1.0 + std::pow(10.0, -kStoiBeta / 20.0);
  const std::size_t segments = frames - kStoiSegment + 1;
  double total = 0.0;
  std::vector<double> xs(kStoiSegment), ys(kStoiSegment);
  for (std::size_t s = 0; s < segments; ++s) {
    for (int band = 0; band < kStoiBands; ++band) {
      double xn = 0.0, yn = 0.0;
      for (int t = 0; t < kStoiSegment; ++t) {
        xs[t] = xe(band, s + t);
        ys[t] = ye(band, s + t);
        xn += xs[t] * xs[t];
        yn += ys[t] * ys[t];
      }
      const double gain = std::sqrt(xn) / (std::sqrt(yn) + kEps);
      double xm = 0.0, ym = 0.0;
      for (int t = 0; t < kStoiSegment; ++t) {
        ys[t] = std::min(ys[t] * gain, xs[t] * clip);
        xm += xs[t];
        ym += ys[t];
      }
      xm /= kStoiSegment;
      ym /= kStoiSegment;
      double xx = 0.0, yy = 0.0, xy = 0.0;
      for (int t = 0; t < kStoiSegment; ++t) {
        const double dx = xs[t] - xm, dy = ys[t] - ym;
        xx += dx * dx;
        yy += dy * dy;
        xy += dx * dy;
      }
      total += xy / ((std::sqrt(xx) + kEps) * (std::sqrt(yy) + kEps));
    }
  }
  const double d = total / (static_cast<double>(kStoiBands) * segments);
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace swara
