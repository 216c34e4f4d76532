// tests/test_dsp.cc

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "swara/dsp.h"
#include "swara/error.h"
#include "test_util.h"

namespace swara::dsp {
namespace {

using testing::ThrownCode;

AudioBuffer Constant(float v, std::size_t n, int sr) {
  AudioBuffer buf;
  buf.sample_rate = sr;
  buf.samples.assign(n, v);
  return buf;
}

double Mean(const std::vector<double> &v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

TEST_SUITE("dsp") {

TEST_CASE("default framing scales 2048/512 at 44.1 kHz to other rates") {
  CHECK(DefaultFrameConfig(44100).frame_len == 2048);
  CHECK(DefaultFrameConfig(44100).hop == 512);
  CHECK(DefaultFrameConfig(48000).frame_len == 2048);
  CHECK(DefaultFrameConfig(22050).frame_len == 1024);
  CHECK(DefaultFrameConfig(16000).frame_len == 512);
  CHECK(DefaultFrameConfig(16000).hop == 128);
  CHECK(DefaultFrameConfig(8000).frame_len == 256);
}

TEST_CASE("frame count formula") {
  CHECK(FrameCount(1024, 1024, 1) == 1);
  CHECK(FrameCount(1024, 1024, 999) == 1);
  CHECK(FrameCount(1023, 1024, 256) == 0);
  CHECK(FrameCount(2048, 1024, 256) == 5);
  CHECK(Stft(Constant(0.1f, 512, 8000), 512, 77).n_frames() == 1);
}

TEST_CASE("stft argument checks") {
  CHECK(ThrownCode([] { Stft(Constant(0.1f, 100, 8000), 256, 64); }) ==
        ErrorCode::kSignalTooShort);
  CHECK(ThrownCode([] { Stft(Constant(0.1f, 1000, 8000), 300, 64); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("silence has zero magnitude everywhere") {
  const Spectrogram spec = Stft(Constant(0.0f, 4096, 16000), 512, 128);
  for (double v : spec.magnitudes.data()) CHECK(v == 0.0);
}

TEST_CASE("one stft frame equals the direct DFT of the windowed frame") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  AudioBuffer buf;
  buf.sample_rate = 16000;
  buf.samples.resize(256 + 64 * 3);
  for (float &s : buf.samples) s = u(rng);
  const Spectrogram spec = Stft(buf, 256, 64);
  const std::size_t f = 2;
  std::vector<double> frame(256);
  for (int i = 0; i < 256; ++i)
    frame[i] = (0.5 - 0.5 * std::cos(2.0 * synth::kPi * i / 256)) * buf.samples[f * 64 + i];
  const auto dft = oracle::NaiveDft(frame);
  double energy_time = 0.0, energy_freq = 0.0;
  for (double v : frame) energy_time += v * v;
  for (std::size_t k = 0; k < 256; ++k) energy_freq += std::norm(dft[k]);
  CHECK(energy_freq / 256.0 == doctest::Approx(energy_time).epsilon(1e-12));
  for (std::size_t k = 0; k <= 128; ++k)
    CHECK(spec.magnitudes(f, k) == doctest::Approx(std::abs(dft[k])).epsilon(1e-9));
}

TEST_CASE("bin-centred sine concentrates its energy in three bins") {
  const int sr = 16000, n = 512, k = 37;
  const AudioBuffer buf = synth::Sine(static_cast<double>(k) * sr / n, 0.8, 0.25, sr);
  const Spectrogram spec = Stft(buf, n, 128);
  for (std::size_t f = 0; f < spec.n_frames(); ++f) {
    double total = 0.0, near = 0.0;
    for (std::size_t b = 0; b < spec.n_bins(); ++b) {
      const double e = spec.magnitudes(f, b) * spec.magnitudes(f, b);
      total += e;
      if (b + 1 >= k && b <= k + 1) near += e;
    }
    CHECK(near >= 0.95 * total);
  }
}

TEST_CASE("mel filterbank rows are normalized triangles") {
  const Matrix fb = MelFilterbank(40, 1024, 22050, 0.0, 11025.0);
  REQUIRE(fb.rows() == 40);
  REQUIRE(fb.cols() == 513);
  for (std::size_t m = 0; m < fb.rows(); ++m) {
    double sum = 0.0;
    for (double w : fb.row(m)) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(HzToMel(MelToHz(1234.5)) == doctest::Approx(1234.5).epsilon(1e-12));
  CHECK(HzToMel(700.0) == doctest::Approx(2595.0 * std::log10(2.0)));
}

TEST_CASE("a tone at a band centre peaks in that band") {
  const int sr = 44100, n = 2048, n_mels = 80;
  const double mel_hi = HzToMel(sr / 2.0);
  const Matrix fb = MelFilterbank(n_mels, n, sr, 0.0, sr / 2.0);
  for (int m : {20, 35, 50, 65, 78}) {
    const double centre = MelToHz(mel_hi * (m + 1) / (n_mels + 1));
    // The filterbank weights at the centre bin already single out band m.
    const auto bin = static_cast<std::size_t>(std::lround(centre * n / sr));
    std::size_t best = 0;
    for (std::size_t r = 0; r < fb.rows(); ++r)
      if (fb(r, bin) > fb(best, bin)) best = r;
    CHECK(best == static_cast<std::size_t>(m));

    const Spectrogram spec = Stft(synth::Sine(centre, 0.5, 0.2, sr), n, 512);
    const Matrix mel = MelSpectrogram(spec, n_mels, 0.0, sr / 2.0);
    REQUIRE(mel.cols() == static_cast<std::size_t>(n_mels));
    auto row = mel.row(1);
    CHECK(std::max_element(row.begin(), row.end()) - row.begin() == m);
  }
}

TEST_CASE("mel of silence is zero and n_mels sets the width") {
  const Spectrogram spec = Stft(Constant(0.0f, 2048, 16000), 512, 256);
  const Matrix mel = MelSpectrogram(spec, 40, 0.0, 8000.0);
  for (double v : mel.data()) CHECK(v == 0.0);
  const Spectrogram tone = Stft(synth::Sine(500.0, 0.5, 0.1, 16000), 512, 256);
  CHECK(MelSpectrogram(tone, 2, 0.0, 8000.0).cols() == 2);
}

TEST_CASE("mfcc of a constant row keeps only the energy term") {
  Matrix mel(3, 16, 0.25);
  const MelCepstra c = Mfcc(mel, 16);
  for (std::size_t f = 0; f < 3; ++f) {
    CHECK(c.coeffs(f, 0) == doctest::Approx(4.0 * std::log(0.25 + kLogFloor)).epsilon(1e-12));
    for (std::size_t k = 1; k < 16; ++k) CHECK(std::fabs(c.coeffs(f, k)) < 1e-12);
  }
  CHECK(Mfcc(mel, 16).coeffs == c.coeffs);
}

TEST_CASE("mfcc DCT matches the cosine-sum oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-4, 2.0);
  for (int n_bands : {8, 80}) {
    Matrix mel(5, n_bands);
    for (double &v : mel.data()) v = u(rng);
    const int keep = n_bands == 8 ? 8 : 13;
    const MelCepstra c = Mfcc(mel, keep);
    for (std::size_t f = 0; f < mel.rows(); ++f) {
      std::vector<double> logmel(n_bands);
      for (int b = 0; b < n_bands; ++b) logmel[b] = std::log(mel(f, b) + kLogFloor);
      const auto ref = oracle::NaiveDct2(logmel);
      for (int k = 0; k < keep; ++k) CHECK(std::fabs(c.coeffs(f, k) - ref[k]) < 1e-9);
    }
  }
}

TEST_CASE("zero-crossing rate") {
  for (double z : ZeroCrossingRate(Constant(0.3f, 2048, 8000), 256, 64)) CHECK(z == 0.0);
  AudioBuffer alt = Constant(1.0f, 1024, 8000);
  for (std::size_t i = 1; i < alt.samples.size(); i += 2) alt.samples[i] = -1.0f;
  for (double z : ZeroCrossingRate(alt, 256, 64)) CHECK(z == 1.0);
  // Two crossings per 80-sample period.
  const AudioBuffer sine = synth::Sine(100.0, 0.9, 1.0, 8000);
  const FrameConfig fc = DefaultFrameConfig(8000);
  const double mean = Mean(ZeroCrossingRate(sine, fc.frame_len, fc.hop));
  CHECK(std::fabs(mean - 0.025) <= 0.0025);
}

TEST_CASE("rms energy") {
  for (double e : RmsEnergy(Constant(0.0f, 1024, 8000), 256, 128)) CHECK(e == 0.0);
  for (double e : RmsEnergy(Constant(0.5f, 1024, 8000), 256, 128))
    CHECK(e == doctest::Approx(0.5).epsilon(1e-7));
  const AudioBuffer sine = synth::Sine(441.0, 1.0, 0.5, 44100);
  for (double e : RmsEnergy(sine, 2048, 512))
    CHECK(std::fabs(e - 1.0 / std::sqrt(2.0)) <= 0.01 / std::sqrt(2.0));
}

TEST_CASE("spectral centroid") {
  const Spectrogram silent = Stft(Constant(0.0f, 2048, 16000), 512, 256);
  for (double c : SpectralCentroid(silent)) CHECK(c == 0.0);

  for (auto [hz, sr] : {std::pair{2000.0, 16000}, std::pair{1000.0, 44100}}) {
    const FrameConfig fc = DefaultFrameConfig(sr);
    const Spectrogram spec = Stft(synth::Sine(hz, 0.5, 0.5, sr), fc.frame_len, fc.hop);
    const double bin = static_cast<double>(sr) / fc.frame_len;
    for (double c : SpectralCentroid(spec)) CHECK(std::fabs(c - hz) <= bin);
  }

  Spectrogram two;
  two.frame_len = 512;
  two.hop = 128;
  two.sample_rate = 16000;
  two.magnitudes = Matrix(1, 257, 0.0);
  two.magnitudes(0, 10) = 3.0;
  two.magnitudes(0, 30) = 3.0;
  CHECK(SpectralCentroid(two)[0] ==
        doctest::Approx((two.bin_hz(10) + two.bin_hz(30)) / 2.0).epsilon(1e-12));
}

TEST_CASE("pitch of silence, a 220 Hz sine and white noise") {
  const PitchTrack silent = EstimateF0(Constant(0.0f, 8192, 44100), 2048, 512);
  CHECK(silent.n_voiced() == 0);
  for (double f : silent.f0_hz) CHECK(f == 0.0);

  const AudioBuffer sine = synth::Sine(220.0, 0.6, 1.0, 44100);
  // Brute-force autocorrelation over the 50-500 Hz lags peaks at 44100/220.
  std::size_t best_lag = 0;
  double best = -1.0;
  for (std::size_t lag = 88; lag <= 882; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 2048; ++i) acc += sine.samples[i] * sine.samples[i + lag];
    if (acc > best) {
      best = acc;
      best_lag = lag;
    }
  }
  CHECK(std::fabs(44100.0 / best_lag - 220.0) <= 2.0);
  const PitchTrack track = EstimateF0(sine, 2048, 512);
  CHECK(track.n_voiced() == track.f0_hz.size());
  for (double f : track.f0_hz) CHECK(std::fabs(f - 220.0) <= 2.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<float> u(-0.5f, 0.5f);
  AudioBuffer noise = Constant(0.0f, 44100, 44100);
  for (float &s : noise.samples) s = u(rng);
  const PitchTrack nt = EstimateF0(noise, 2048, 512);
  CHECK(static_cast<double>(nt.n_voiced()) <= 0.1 * nt.f0_hz.size());
}

}  // TEST_SUITE

}  // namespace
}  // namespace swara::dsp
