// src/audio_io.cc

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

#include "swara/audio_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numbers>
#include <numeric>

#include "swara/error.h"

namespace swara {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t Le16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
std::uint32_t Le32(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}
void PutLe16(std::string *out, std::uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>(v >> 8));
}
void PutLe32(std::string *out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

}  // namespace

AudioBuffer ReadWav(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  const std::string name = path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::kMalformedHeader, name + ": not a RIFF/WAVE file");

  FmtChunk fmt;
  bool have_fmt = false;
  const unsigned char *data = nullptr;
  std::size_t data_size = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *hdr = bytes.data() + pos;
    std::size_t size = Le32(hdr + 4);
    std::size_t body = pos + 8;
    std::size_t avail = bytes.size() - body;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (size < 16 || size > avail)
        throw Error(ErrorCode::kMalformedHeader, name + ": truncated fmt chunk");
      const unsigned char *p = bytes.data() + body;
      fmt.format = Le16(p);
      fmt.channels = Le16(p + 2);
      fmt.sample_rate = Le32(p + 4);
      fmt.block_align = Le16(p + 12);
      fmt.bits = Le16(p + 14);
      if (fmt.format == kFormatExtensible) {
        if (size < 40)
          throw Error(ErrorCode::kMalformedHeader,
                      name + ": truncated extensible fmt chunk");
        // First two bytes of the sub-format GUID carry the actual format tag.
        fmt.format = Le16(p + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      // Streamed writers sometimes leave a bogus size; take what is there.
      data = bytes.data() + body;
      data_size = std::min(size, avail);
      have_data = true;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw Error(ErrorCode::kMalformedHeader, name + ": no fmt chunk");
  if (!have_data) throw Error(ErrorCode::kMalformedHeader, name + ": no data chunk");

  bool pcm16 = fmt.format == kFormatPcm && fmt.bits == 16;
  bool float32 = fmt.format == kFormatFloat && fmt.bits == 32;
  if (!pcm16 && !float32)
    throw Error(ErrorCode::kUnsupportedEncoding,
                name + ": format " + std::to_string(fmt.format) + " with " +
                    std::to_string(fmt.bits) + " bits per sample");
  if (fmt.channels != 1 && fmt.channels != 2)
    throw Error(ErrorCode::kUnsupportedEncoding,
                name + ": " + std::to_string(fmt.channels) + " channels");
  if (fmt.sample_rate == 0)
    throw Error(ErrorCode::kMalformedHeader, name + ": zero sample rate");
  std::size_t bytes_per_sample = fmt.bits / 8;
  std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  if (fmt.block_align != frame_bytes)
    throw Error(ErrorCode::kMalformedHeader, name + ": inconsistent block align");

  std::size_t frames = data_size / frame_bytes;
  if (frames == 0) throw Error(ErrorCode::kEmptyAudio, name + ": zero frames");

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(fmt.sample_rate);
  buf.source_id = name;
  buf.samples.resize(frames);
  auto sample_at = [&](std::size_t idx) -> float {
    const unsigned char *p = data + idx * bytes_per_sample;
    if (pcm16) return static_cast<std::int16_t>(Le16(p)) / 32768.0f;
    std::uint32_t bits = Le32(p);
    float f;
    std::memcpy(&f, &bits, sizeof f);
    return f;
  };
  for (std::size_t i = 0; i < frames; ++i) {
    if (fmt.channels == 1) {
      buf.samples[i] = sample_at(i);
    } else {
      buf.samples[i] = 0.5f * (sample_at(2 * i) + sample_at(2 * i + 1));
    }
  }
  return buf;
}

void WriteWav(const std::filesystem::path &path, const AudioBuffer &buf,
              WavEncoding encoding) {
  if (buf.sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const std::uint16_t bits = pcm16 ? 16 : 32;
  const std::uint16_t block = bits / 8;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buf.samples.size() * block);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutLe32(&out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  PutLe32(&out, 16);
  PutLe16(&out, pcm16 ? kFormatPcm : kFormatFloat);
  PutLe16(&out, 1);
  PutLe32(&out, static_cast<std::uint32_t>(buf.sample_rate));
  PutLe32(&out, static_cast<std::uint32_t>(buf.sample_rate) * block);
  PutLe16(&out, block);
  PutLe16(&out, bits);
  out += "data";
  PutLe32(&out, data_bytes);
  for (float s : buf.samples) {
    if (pcm16) {
      double scaled = std::round(static_cast<double>(s) * 32768.0);
      scaled = std::clamp(scaled, -32768.0, 32767.0);
      PutLe16(&out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
    } else {
      std::uint32_t u;
      std::memcpy(&u, &s, sizeof u);
      PutLe32(&out, u);
    }
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

namespace {

constexpr double kKaiserBeta = 8.6;
constexpr int kZeroCrossings = 32;
// Above this many table entries taps are computed per output sample.
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 22;

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

class SincKernel {
 public:
  SincKernel(double cutoff)
      : cutoff_(cutoff),
        half_width_(kZeroCrossings / cutoff),
        i0_beta_(std::cyl_bessel_i(0.0, kKaiserBeta)) {}

  double half_width() const { return half_width_; }

  // x in input samples.
  double operator()(double x) const {
    double u = x / half_width_;
    if (u <= -1.0 || u >= 1.0) return 0.0;
    double w = std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(1.0 - u * u)) /
               i0_beta_;
    return cutoff_ * Sinc(cutoff_ * x) * w;
  }

 private:
  double cutoff_;
  double half_width_;
  double i0_beta_;
};

// Taps for input offsets j = -reach+1 .. reach relative to floor(t), where
// t = base + frac. Normalized to unit DC gain.
void FillTaps(const SincKernel &kernel, double frac, int reach,
              double *taps) {
  double sum = 0.0;
  for (int j = -reach + 1; j <= reach; ++j) {
    double h = kernel(frac - j);
    taps[j + reach - 1] = h;
    sum += h;
  }
  if (sum != 0.0)
    for (int k = 0; k < 2 * reach; ++k) taps[k] /= sum;
}

}  // namespace

AudioBuffer Resample(const AudioBuffer &buf, int target_rate) {
  if (target_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "target rate must be positive");
  if (buf.sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "source rate must be positive");
  if (buf.sample_rate == target_rate) return buf;

  const std::int64_t src = buf.sample_rate;
  const std::int64_t dst = target_rate;
  const std::int64_t g = std::gcd(src, dst);
  const std::int64_t up = dst / g;    // phases
  const std::int64_t down = src / g;  // input advance per `up` outputs
  const std::int64_t n_in = static_cast<std::int64_t>(buf.samples.size());
  const std::int64_t n_out = (n_in * dst + src / 2) / src;

  const double cutoff = std::min(1.0, static_cast<double>(dst) / src);
  SincKernel kernel(cutoff);
  const int reach = static_cast<int>(std::ceil(kernel.half_width()));
  const std::size_t taps_per_phase = 2 * static_cast<std::size_t>(reach);

  std::vector<double> table;
  const bool tabulate =
      static_cast<std::size_t>(up) * taps_per_phase <= kMaxTableEntries;
  if (tabulate) {
    table.resize(static_cast<std::size_t>(up) * taps_per_phase);
    for (std::int64_t p = 0; p < up; ++p)
      FillTaps(kernel, static_cast<double>(p) / up, reach,
               table.data() + p * taps_per_phase);
  }

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.source_id = buf.source_id;
  out.samples.resize(static_cast<std::size_t>(n_out));
  std::vector<double> scratch(tabulate ? 0 : taps_per_phase);
  for (std::int64_t n = 0; n < n_out; ++n) {
    const std::int64_t pos = n * down;
    const std::int64_t base = pos / up;
    const std::int64_t phase = pos % up;
    const double *taps;
    if (tabulate) {
      taps = table.data() + phase * taps_per_phase;
    } else {
      FillTaps(kernel, static_cast<double>(phase) / up, reach, scratch.data());
      taps = scratch.data();
    }
    double acc = 0.0;
    std::int64_t first = base - reach + 1;
    std::int64_t lo = std::max<std::int64_t>(first, 0);
    std::int64_t hi = std::min<std::int64_t>(base + reach, n_in - 1);
    for (std::int64_t k = lo; k <= hi; ++k)
      acc += taps[k - first] * buf.samples[static_cast<std::size_t>(k)];
    out.samples[static_cast<std::size_t>(n)] = static_cast<float>(acc);
  }
  return out;
}

AudioBuffer PeakNormalize(const AudioBuffer &buf, float target_peak) {
  if (!(target_peak > 0.0f && target_peak <= 1.0f))
    throw Error(ErrorCode::kInvalidArgument, "target peak must be in (0, 1]");
  float peak = 0.0f;
  for (float s : buf.samples) peak = std::max(peak, std::fabs(s));
  if (peak == 0.0f || peak == target_peak) return buf;
  // Scaling in double lands the peak sample exactly on target_peak after
  // rounding to float, which makes a second application a no-op.
  const double scale = static_cast<double>(target_peak) / peak;
  AudioBuffer out = buf;
  for (float &s : out.samples) s = static_cast<float>(s * scale);
  return out;
}

}  // namespace swara
