// swara/parallel.h

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

#ifndef SWARA_PARALLEL_H_
#define SWARA_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace swara {

// Calls body(i) for every i in [0, n) on up to `jobs` threads, each thread
// taking one contiguous block of indices. If any call throws, the exception
// from the lowest failing index is rethrown after all threads join.
void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)> &body);

}  // namespace swara

#endif  // SWARA_PARALLEL_H_
