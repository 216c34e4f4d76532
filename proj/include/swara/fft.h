// swara/fft.h

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

#ifndef SWARA_FFT_H_
#define SWARA_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace swara {

// Unnormalized real-to-complex DFT of a fixed size, backed by FFTW.
// X_k = sum_n x_n exp(-2 pi i k n / N), k = 0..N/2.
//
// Plans are created under a process-wide lock; an instance owns its own
// aligned buffers, so distinct instances may run concurrently.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(const RealFft &) = delete;
  RealFft &operator=(const RealFft &) = delete;

  std::size_t size() const { return size_; }

  // `input` may be shorter than size(); it is zero padded.
  void Forward(std::span<const double> input,
               std::vector<std::complex<double>> *out);

 private:
  std::size_t size_;
  double *in_;
  void *out_;
  void *plan_;
};

// Per-thread cached transform for `size`.
RealFft &ThreadLocalFft(std::size_t size);

}  // namespace swara

#endif  // SWARA_FFT_H_
