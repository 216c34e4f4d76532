// src/fft.cc

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

#include "swara/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "swara/error.h"

namespace swara {

namespace {
std::mutex &PlannerMutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t size) : size_(size) {
  if (size < 2)
    throw Error(ErrorCode::kInvalidArgument, "FFT size must be >= 2");
  std::lock_guard<std::mutex> lock(PlannerMutex());
  in_ = fftw_alloc_real(size);
  auto *out = fftw_alloc_complex(size / 2 + 1);
  out_ = out;
  // FFTW_ESTIMATE never measures, so the chosen plan (and therefore the
  // floating point result) does not depend on timing.
  plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(size), in_, out,
                               FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(in_);
  fftw_free(out_);
}

void RealFft::Forward(std::span<const double> input,
                      std::vector<std::complex<double>> *out) {
  std::size_t n = std::min(input.size(), size_);
  std::copy_n(input.begin(), n, in_);
  std::fill(in_ + n, in_ + size_, 0.0);
  fftw_execute(static_cast<fftw_plan>(plan_));
  const auto *res = static_cast<const fftw_complex *>(out_);
  out->resize(size_ / 2 + 1);
  for (std::size_t k = 0; k <= size_ / 2; ++k)
    (*out)[k] = {res[k][0], res[k][1]};
}

RealFft &ThreadLocalFft(std::size_t size) {
  thread_local std::map<std::size_t, std::unique_ptr<RealFft>> cache;
  auto &slot = cache[size];
  if (!slot) slot = std::make_unique<RealFft>(size);
  return *slot;
}

}  // namespace swara
