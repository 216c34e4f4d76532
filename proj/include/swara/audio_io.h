// swara/audio_io.h

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

#ifndef SWARA_AUDIO_IO_H_
#define SWARA_AUDIO_IO_H_

#include <filesystem>
#include <string>
#include <vector>

namespace swara {

inline constexpr int kCorpusSampleRate = 44100;

/// Mono float audio. Samples are nominally in [-1, 1]; integer PCM is scaled
/// by 1/32768 on read.
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = 0;
  std::string source_id;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

enum class WavEncoding { kPcm16, kFloat32 };

/// Reads a RIFF/WAVE file holding PCM16 or IEEE float32 samples in one or two
/// channels. Stereo input is averaged to mono.
///
/// Throws Error with kIoError (unreadable file), kMalformedHeader (not
/// RIFF/WAVE, missing fmt or data chunk), kUnsupportedEncoding (any other
/// sample format or channel count) or kEmptyAudio (zero frames).
AudioBuffer ReadWav(const std::filesystem::path &path);

/// Writes a mono little-endian WAV. Corpus audio is always written as float32;
/// PCM16 output clamps to [-32768, 32767] after scaling by 32768.
void WriteWav(const std::filesystem::path &path, const AudioBuffer &buf,
              WavEncoding encoding = WavEncoding::kFloat32);

/// Band-limited sample rate conversion with a polyphase Kaiser-windowed sinc
/// (beta 8.6, 32 zero crossings per side of the lower of the two Nyquist
/// frequencies). Output length is round(n * target / source).
AudioBuffer Resample(const AudioBuffer &buf, int target_rate);

/// Scales so that max |sample| equals `target_peak`. All-zero input is
/// returned unchanged. Applying it twice with the same target is a no-op.
AudioBuffer PeakNormalize(const AudioBuffer &buf, float target_peak);

}  // namespace swara

#endif  // SWARA_AUDIO_IO_H_
