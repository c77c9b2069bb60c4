// Copyright 2026 The Currikit Authors.
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

#ifndef CURRIKIT_PARALLEL_H_
#define CURRIKIT_PARALLEL_H_

#include <cstddef>
#include <functional>
#include <vector>

namespace currikit {

// Worker cap used when a call passes threads == 0. Initialized from the
// CURRIKIT_THREADS environment variable, else hardware concurrency.
unsigned default_threads();
void set_default_threads(unsigned threads);

// Splits [0, n) into consecutive blocks of `block_size` and calls
// fn(block, begin, end) once per block. Block layout depends only on n and
// block_size, never on the worker count, so per-block partial results merged
// in block order are thread-count independent. The first exception thrown by
// any block is rethrown after all workers join.
void parallel_blocks(
    std::size_t n, std::size_t block_size,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
    unsigned threads = 0);

inline std::size_t block_count(std::size_t n, std::size_t block_size) {
  return (n + block_size - 1) / block_size;
}

// out[i] = fn(i), computed in parallel.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn, unsigned threads = 0) {
  std::vector<R> out(n);
  parallel_blocks(
      n, 256,
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      },
      threads);
  return out;
}

}  // namespace currikit

#endif  // CURRIKIT_PARALLEL_H_
