// tools/make_minicorpus.cc

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

// Writes the bundled synthetic corpus: speech-like harmonic syllables with a
// moving F0, a short exponential room tail and background noise, stored as
// 16-bit WAV at assorted rates with JSON transcript sidecars.
//
// Usage: make_minicorpus OUT_DIR

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "swara/audio_io.h"

namespace {

struct Utterance {
  const char *id;
  int rate;
  const char *transcription;
  const char *language;
  const char *emotion;
  const char *speaker;
  int syllables;
  double f0_base;     // Hz
  double f0_swing;    // relative F0 excursion per syllable
  double rt60_s;
  double noise_rms;
};

const Utterance kCorpus[] = {
    {"utt01", 16000, "नमस्ते आप कैसे हैं", "hindi", "default", "Akshansh", 7,
     130.0, 0.10, 0.15, 0.002},
    {"utt02", 22050, "hello how are you today", "english", "happy", "Meera", 8,
     210.0, 0.30, 0.05, 0.010},
    {"utt03", 24000, "Namaste, let's talk about मौसम", "mixed", "default",
     "Akshansh", 9, 120.0, 0.15, 0.30, 0.004},
    {"utt04", 44100, "मुझे यह पसंद है", "hindi", "sad", "Meera", 6, 180.0,
     0.04, 0.10, 0.001},
    {"utt05", 48000, "this is a clear sentence", "english", "emphasis",
     "Akshansh", 8, 150.0, 0.25, 0.02, 0.0005},
};

constexpr double kDuration = 2.0;

std::vector<float> Synthesize(const Utterance &u, std::mt19937_64 &rng) {
  const int sr = u.rate;
  const auto n = static_cast<std::size_t>(kDuration * sr);
  std::vector<double> dry(n, 0.0);
  const double slot = (kDuration - 0.2) / u.syllables;
  double phase = 0.0;
  for (int s = 0; s < u.syllables; ++s) {
    const double start = 0.1 + s * slot;
    const double len = slot * 0.7;
    const double dir = (s % 2 == 0) ? 1.0 : -1.0;
    const auto i0 = static_cast<std::size_t>(start * sr);
    const auto i1 = static_cast<std::size_t>((start + len) * sr);
    for (std::size_t i = i0; i < i1 && i < n; ++i) {
      const double t = static_cast<double>(i - i0) / sr;
      const double pos = t / len;
      const double f0 = u.f0_base * (1.0 + u.f0_swing * dir * (pos - 0.5) +
                                     0.5 * u.f0_swing * std::sin(0.7 * s));
      phase += 2.0 * std::numbers::pi * f0 / sr;
      double v = 0.0;
      for (int h = 1; h <= 12; ++h) {
        if (h * f0 >= 0.45 * sr) break;
        // Formant-like emphasis around 500 Hz and 1500 Hz.
        const double fh = h * f0;
        const double gain = 1.0 / h + 0.6 * std::exp(-std::pow((fh - 500.0) / 250.0, 2)) +
                            0.3 * std::exp(-std::pow((fh - 1500.0) / 400.0, 2));
        v += gain * std::sin(h * phase);
      }
      const double attack = std::min(1.0, t / 0.02);
      const double release = std::min(1.0, (len - t) / 0.03);
      dry[i] = 0.2 * v * attack * release;
    }
  }
  // Exponential room tail: 60 dB decay over rt60_s, sparse random taps.
  const auto tail = static_cast<std::size_t>(u.rt60_s * sr);
  std::vector<double> wet = dry;
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double decay = std::log(1000.0) / (u.rt60_s * sr);
  for (std::size_t k = sr / 200; k < tail; k += 7) {
    const double g = 0.05 * gauss(rng) * std::exp(-decay * k);
    for (std::size_t i = k; i < n; ++i) wet[i] += g * dry[i - k];
  }
  std::vector<float> out(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    wet[i] += u.noise_rms * gauss(rng);
    peak = std::max(peak, std::fabs(wet[i]));
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<float>(0.8 * wet[i] / peak);
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_minicorpus OUT_DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(20260101);
  for (const Utterance &u : kCorpus) {
    swara::AudioBuffer buf;
    buf.sample_rate = u.rate;
    buf.samples = Synthesize(u, rng);
    swara::WriteWav(dir / (std::string(u.id) + ".wav"), buf, swara::WavEncoding::kPcm16);
    nlohmann::ordered_json j;
    j["transcription"] = u.transcription;
    j["language"] = u.language;
    j["emotion"] = u.emotion;
    j["speaker"] = u.speaker;
    std::ofstream(dir / (std::string(u.id) + ".json")) << j.dump(2) << "\n";
  }
  std::cout << "wrote " << std::size(kCorpus) << " utterances to " << dir << "\n";
  return 0;
}
