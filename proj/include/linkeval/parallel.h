// Copyright 2026 The linkeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINKEVAL_PARALLEL_H_
#define LINKEVAL_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace linkeval {

#if defined(_OPENMP)
inline constexpr bool kUseOpenMp = true;
inline int MaxThreads() { return omp_get_max_threads(); }
#else
inline constexpr bool kUseOpenMp = false;
inline int MaxThreads() { return 1; }
#endif

// Runs body(i) for i in [0, count) across OpenMP threads. Bodies must write
// only to their own slot. Exceptions are collected per index and the one
// with the smallest index is rethrown, so failures do not depend on
// scheduling. threads <= 0 uses the OpenMP default.
template <typename Body>
void ParallelFor(std::size_t count, Body &&body, int threads = 0) {
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
#if defined(_OPENMP)
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#else
  (void)threads;
#endif
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr &error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace linkeval

#endif  // LINKEVAL_PARALLEL_H_
