// src/dsp.cc

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

#include "swara/dsp.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>

#include "swara/error.h"
#include "swara/fft.h"

namespace swara::dsp {

namespace {

void CheckFraming(std::size_t n_samples, int frame_len, int hop) {
  if (frame_len < 2)
    throw Error(ErrorCode::kInvalidArgument, "frame length must be >= 2");
  if (hop <= 0 || hop > frame_len)
    throw Error(ErrorCode::kInvalidArgument,
                "hop must be in (0, frame_len]");
  if (n_samples < static_cast<std::size_t>(frame_len))
    throw Error(ErrorCode::kSignalTooShort,
                std::to_string(n_samples) + " samples is shorter than one " +
                    std::to_string(frame_len) + "-sample frame");
}

std::span<const float> FrameAt(const AudioBuffer &buf, std::size_t f,
                               int frame_len, int hop) {
  return std::span<const float>(buf.samples)
      .subspan(f * static_cast<std::size_t>(hop),
               static_cast<std::size_t>(frame_len));
}

std::vector<double> PeriodicHann(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  return w;
}

}  // namespace

FrameConfig DefaultFrameConfig(int sample_rate) {
  if (sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  double target = 2048.0 * sample_rate / 44100.0;
  int below = static_cast<int>(std::bit_floor(
      static_cast<unsigned>(std::max(2.0, std::floor(target)))));
  int above = below * 2;
  int frame = (target - below <= above - target) ? below : above;
  return {frame, frame / 4};
}

std::size_t FrameCount(std::size_t n_samples, int frame_len, int hop) {
  if (frame_len <= 0 || hop <= 0 ||
      n_samples < static_cast<std::size_t>(frame_len))
    return 0;
  return (n_samples - frame_len) / hop + 1;
}

std::size_t PitchTrack::n_voiced() const {
  return static_cast<std::size_t>(std::count(voiced.begin(), voiced.end(), true));
}

Spectrogram Stft(const AudioBuffer &buf, int frame_len, int hop) {
  if (frame_len < 2 || !std::has_single_bit(static_cast<unsigned>(frame_len)))
    throw Error(ErrorCode::kInvalidArgument,
                "frame length must be a power of two >= 2");
  CheckFraming(buf.samples.size(), frame_len, hop);

  const std::size_t n_frames = FrameCount(buf.samples.size(), frame_len, hop);
  const std::size_t n_bins = static_cast<std::size_t>(frame_len) / 2 + 1;
  Spectrogram spec;
  spec.frame_len = frame_len;
  spec.hop = hop;
  spec.sample_rate = buf.sample_rate;
  spec.magnitudes = Matrix(n_frames, n_bins);

  const auto window = PeriodicHann(frame_len);
  RealFft &fft = ThreadLocalFft(static_cast<std::size_t>(frame_len));
  std::vector<double> frame(frame_len);
  std::vector<std::complex<double>> bins;
  for (std::size_t f = 0; f < n_frames; ++f) {
    auto src = FrameAt(buf, f, frame_len, hop);
    for (int i = 0; i < frame_len; ++i) frame[i] = window[i] * src[i];
    fft.Forward(frame, &bins);
    auto row = spec.magnitudes.row(f);
    for (std::size_t k = 0; k < n_bins; ++k) row[k] = std::abs(bins[k]);
  }
  return spec;
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

Matrix MelFilterbank(int n_mels, int n_fft, int sample_rate, double fmin,
                     double fmax) {
  if (n_mels < 2)
    throw Error(ErrorCode::kInvalidArgument, "need at least 2 mel bands");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0))
    throw Error(ErrorCode::kInvalidArgument,
                "mel range must satisfy 0 <= fmin < fmax <= sample_rate/2");
  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  const double mel_lo = HzToMel(fmin);
  const double mel_hi = HzToMel(fmax);
  std::vector<double> edges(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i)
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1));

  const double bin_hz = static_cast<double>(sample_rate) / n_fft;
  Matrix fb(n_mels, n_bins);
  for (int m = 0; m < n_mels; ++m) {
    const double lo = edges[m], center = edges[m + 1], hi = edges[m + 2];
    double sum = 0.0;
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f <= center)
        w = (f - lo) / (center - lo);
      else if (f > center && f < hi)
        w = (hi - f) / (hi - center);
      fb(m, k) = w;
      sum += w;
    }
    if (sum > 0.0) {
      for (std::size_t k = 0; k < n_bins; ++k) fb(m, k) /= sum;
    } else {
      auto nearest = static_cast<std::size_t>(std::lround(center / bin_hz));
      fb(m, std::min(nearest, n_bins - 1)) = 1.0;
    }
  }
  return fb;
}

Matrix MelSpectrogram(const Spectrogram &spec, int n_mels, double fmin,
                      double fmax) {
  Matrix fb = MelFilterbank(n_mels, spec.frame_len, spec.sample_rate, fmin, fmax);
  Matrix mel(spec.n_frames(), static_cast<std::size_t>(n_mels));
  std::vector<double> power(spec.n_bins());
  for (std::size_t f = 0; f < spec.n_frames(); ++f) {
    auto mag = spec.magnitudes.row(f);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = mag[k] * mag[k];
    for (int m = 0; m < n_mels; ++m) {
      auto w = fb.row(m);
      double acc = 0.0;
      for (std::size_t k = 0; k < power.size(); ++k) acc += w[k] * power[k];
      mel(f, m) = acc;
    }
  }
  return mel;
}

MelCepstra Mfcc(const Matrix &mel, int n_coeffs) {
  const std::size_t n_mels = mel.cols();
  if (n_coeffs < 1 || static_cast<std::size_t>(n_coeffs) > n_mels)
    throw Error(ErrorCode::kInvalidArgument,
                "n_coeffs must be in [1, n_mels]");
  // Orthonormal DCT-II basis.
  Matrix basis(n_coeffs, n_mels);
  for (int k = 0; k < n_coeffs; ++k) {
    const double scale =
        k == 0 ? std::sqrt(1.0 / n_mels) : std::sqrt(2.0 / n_mels);
    for (std::size_t n = 0; n < n_mels; ++n)
      basis(k, n) =
          scale * std::cos(std::numbers::pi * k * (2.0 * n + 1.0) / (2.0 * n_mels));
  }
  MelCepstra out;
  out.coeffs = Matrix(mel.rows(), static_cast<std::size_t>(n_coeffs));
  std::vector<double> logmel(n_mels);
  for (std::size_t f = 0; f < mel.rows(); ++f) {
    auto row = mel.row(f);
    for (std::size_t n = 0; n < n_mels; ++n)
      logmel[n] = std::log(row[n] + kLogFloor);
    for (int k = 0; k < n_coeffs; ++k) {
      auto b = basis.row(k);
      double acc = 0.0;
      for (std::size_t n = 0; n < n_mels; ++n) acc += b[n] * logmel[n];
      out.coeffs(f, k) = acc;
    }
  }
  return out;
}

MelCepstra ComputeMfcc(const AudioBuffer &buf, FrameConfig frames, int n_mels,
                       int n_coeffs) {
  Spectrogram spec = Stft(buf, frames.frame_len, frames.hop);
  MelCepstra out = Mfcc(
      MelSpectrogram(spec, n_mels, 0.0, buf.sample_rate / 2.0), n_coeffs);
  out.hop = frames.hop;
  out.sample_rate = buf.sample_rate;
  return out;
}

std::vector<double> ZeroCrossingRate(const AudioBuffer &buf, int frame_len,
                                     int hop) {
  CheckFraming(buf.samples.size(), frame_len, hop);
  const std::size_t n_frames = FrameCount(buf.samples.size(), frame_len, hop);
  std::vector<double> out(n_frames);
  for (std::size_t f = 0; f < n_frames; ++f) {
    auto x = FrameAt(buf, f, frame_len, hop);
    int crossings = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
      if ((x[i - 1] > 0.0f && x[i] < 0.0f) || (x[i - 1] < 0.0f && x[i] > 0.0f))
        ++crossings;
    out[f] = static_cast<double>(crossings) / (frame_len - 1);
  }
  return out;
}

std::vector<double> RmsEnergy(const AudioBuffer &buf, int frame_len, int hop) {
  CheckFraming(buf.samples.size(), frame_len, hop);
  const std::size_t n_frames = FrameCount(buf.samples.size(), frame_len, hop);
  std::vector<double> out(n_frames);
  for (std::size_t f = 0; f < n_frames; ++f) {
    double acc = 0.0;
    for (float s : FrameAt(buf, f, frame_len, hop))
      acc += static_cast<double>(s) * s;
    out[f] = std::sqrt(acc / frame_len);
  }
  return out;
}

std::vector<double> SpectralCentroid(const Spectrogram &spec) {
  std::vector<double> out(spec.n_frames(), 0.0);
  for (std::size_t f = 0; f < spec.n_frames(); ++f) {
    auto mag = spec.magnitudes.row(f);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < mag.size(); ++k) {
      num += spec.bin_hz(k) * mag[k];
      den += mag[k];
    }
    if (den > 0.0) out[f] = num / den;
  }
  return out;
}

PitchTrack EstimateF0(const AudioBuffer &buf, int frame_len, int hop) {
  if (buf.sample_rate < 2000)
    throw Error(ErrorCode::kInvalidArgument,
                "pitch tracking needs a sample rate of at least 2000 Hz");
  CheckFraming(buf.samples.size(), frame_len, hop);
  const double fs = buf.sample_rate;
  const int min_lag = static_cast<int>(std::ceil(fs / kMaxF0Hz));
  const int max_lag =
      std::min(static_cast<int>(std::floor(fs / kMinF0Hz)), frame_len / 2);
  if (max_lag < min_lag + 2)
    throw Error(ErrorCode::kInvalidArgument,
                "frame too short to resolve the 50-500 Hz pitch range");

  const std::size_t n_frames = FrameCount(buf.samples.size(), frame_len, hop);
  PitchTrack track;
  track.hop = hop;
  track.sample_rate = buf.sample_rate;
  track.f0_hz.assign(n_frames, 0.0);
  track.voiced.assign(n_frames, false);

  // Linear autocorrelation through a 2N-point transform: the forward DFT of
  // the (real, even) power spectrum is N_fft times the circular
  // autocorrelation, which equals the linear one for lags < N.
  const std::size_t n_fft = std::bit_ceil(2 * static_cast<std::size_t>(frame_len));
  RealFft &fft = ThreadLocalFft(n_fft);
  std::vector<double> x(frame_len), prefix(frame_len + 1), power(n_fft);
  std::vector<std::complex<double>> spec, acf;
  std::vector<double> nccf(max_lag + 2, 0.0);

  for (std::size_t f = 0; f < n_frames; ++f) {
    auto src = FrameAt(buf, f, frame_len, hop);
    double mean = 0.0;
    for (float s : src) mean += s;
    mean /= frame_len;
    prefix[0] = 0.0;
    for (int i = 0; i < frame_len; ++i) {
      x[i] = src[i] - mean;
      prefix[i + 1] = prefix[i] + x[i] * x[i];
    }
    const double total = prefix[frame_len];
    if (total <= 1e-12) continue;

    fft.Forward(x, &spec);
    for (std::size_t k = 0; k <= n_fft / 2; ++k) power[k] = std::norm(spec[k]);
    for (std::size_t k = n_fft / 2 + 1; k < n_fft; ++k) power[k] = power[n_fft - k];
    fft.Forward(power, &acf);

    double best = -1.0;
    for (int lag = min_lag - 1; lag <= max_lag + 1; ++lag) {
      double head = prefix[frame_len - lag];
      double tail = total - prefix[lag];
      double denom = std::sqrt(head * tail);
      double cross = acf[lag].real() / static_cast<double>(n_fft);
      nccf[lag] = denom > 0.0 ? cross / denom : 0.0;
      if (lag >= min_lag && lag <= max_lag) best = std::max(best, nccf[lag]);
    }
    if (best < kVoicingThreshold) continue;

    int chosen = -1;
    for (int lag = min_lag; lag <= max_lag; ++lag) {
      if (nccf[lag] >= 0.9 * best && nccf[lag] >= nccf[lag - 1] &&
          nccf[lag] >= nccf[lag + 1]) {
        chosen = lag;
        break;
      }
    }
    if (chosen < 0) continue;
    double refined = chosen;
    const double a = nccf[chosen - 1], b = nccf[chosen], c = nccf[chosen + 1];
    const double curvature = a - 2.0 * b + c;
    if (curvature < 0.0) refined += 0.5 * (a - c) / curvature;
    track.f0_hz[f] = std::clamp(fs / refined, kMinF0Hz, kMaxF0Hz);
    track.voiced[f] = true;
  }
  return track;
}

}  // namespace swara::dsp
