// swara/dsp.h

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

#ifndef SWARA_DSP_H_
#define SWARA_DSP_H_

#include <cstddef>
#include <vector>

#include "swara/audio_io.h"
#include "swara/matrix.h"

namespace swara::dsp {

inline constexpr int kDefaultMels = 80;
inline constexpr int kDefaultCepstra = 13;
inline constexpr double kLogFloor = 1e-10;
inline constexpr double kMinF0Hz = 50.0;
inline constexpr double kMaxF0Hz = 500.0;
inline constexpr double kVoicingThreshold = 0.3;

struct FrameConfig {
  int frame_len = 2048;
  int hop = 512;
};

// 2048/512 at 44.1 kHz; the same ~46 ms / ~11.6 ms at other rates, with the
// frame length rounded to a power of two.
FrameConfig DefaultFrameConfig(int sample_rate);

// floor((n - frame_len) / hop) + 1, or 0 when n < frame_len.
std::size_t FrameCount(std::size_t n_samples, int frame_len, int hop);

struct Spectrogram {
  Matrix magnitudes;  // [n_frames x (frame_len / 2 + 1)]
  int frame_len = 0;
  int hop = 0;
  int sample_rate = 0;

  std::size_t n_frames() const { return magnitudes.rows(); }
  std::size_t n_bins() const { return magnitudes.cols(); }
  double bin_hz(std::size_t k) const {
    return static_cast<double>(k) * sample_rate / frame_len;
  }
};

struct MelCepstra {
  Matrix coeffs;  // [n_frames x n_coeffs], column 0 is the energy term
  int hop = 0;
  int sample_rate = 0;
};

struct PitchTrack {
  std::vector<double> f0_hz;  // 0.0 on unvoiced frames
  std::vector<bool> voiced;
  int hop = 0;
  int sample_rate = 0;

  std::size_t n_voiced() const;
};

/// Periodic-Hann windowed magnitude STFT, frames starting at sample 0 with no
/// padding. Unnormalized DFT.
///
/// frame_len must be a power of two >= 2 and 0 < hop <= frame_len.
/// Throws kSignalTooShort when the buffer is shorter than one frame.
Spectrogram Stft(const AudioBuffer &buf, int frame_len, int hop);

double HzToMel(double hz);
double MelToHz(double mel);

/// Triangular HTK-mel filterbank, [n_mels x (n_fft / 2 + 1)]. Every row sums
/// to 1; a filter too narrow to cover any bin gets all its weight on the bin
/// nearest its center.
Matrix MelFilterbank(int n_mels, int n_fft, int sample_rate, double fmin,
                     double fmax);

/// Filterbank applied to the power spectrum, [n_frames x n_mels].
Matrix MelSpectrogram(const Spectrogram &spec, int n_mels, double fmin,
                      double fmax);

/// log(mel + 1e-10) followed by an orthonormal DCT-II; keeps coefficients
/// 0..n_coeffs-1.
MelCepstra Mfcc(const Matrix &mel, int n_coeffs);

/// Stft -> MelSpectrogram(0, sr/2) -> Mfcc with the given framing.
MelCepstra ComputeMfcc(const AudioBuffer &buf, FrameConfig frames,
                       int n_mels = kDefaultMels,
                       int n_coeffs = kDefaultCepstra);

/// Per frame, the fraction of adjacent sample pairs with a strict sign change.
std::vector<double> ZeroCrossingRate(const AudioBuffer &buf, int frame_len,
                                     int hop);

std::vector<double> RmsEnergy(const AudioBuffer &buf, int frame_len, int hop);

/// Magnitude-weighted mean bin frequency per frame; 0 for silent frames.
std::vector<double> SpectralCentroid(const Spectrogram &spec);

/// Normalized cross-correlation pitch tracker over lags for 50-500 Hz. A frame
/// is voiced when its best correlation reaches 0.3; the chosen lag is the
/// shortest local maximum within 90% of the best, refined by parabolic
/// interpolation.
///
/// Requires sample_rate >= 2000. Throws kSignalTooShort for sub-frame input.
PitchTrack EstimateF0(const AudioBuffer &buf, int frame_len, int hop);

}  // namespace swara::dsp

#endif  // SWARA_DSP_H_
