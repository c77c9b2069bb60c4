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

#ifndef CURRIKIT_RANDOM_H_
#define CURRIKIT_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace currikit {

// Seedable generator whose output sequence is identical on every platform.
//
// The engine is std::mt19937_64, whose output is fixed by the C++ standard.
// The standard distributions are not, so bounded integers are drawn by
// rejection sampling and reals are built from the top 53 bits. Together with
// the Fisher-Yates order below this is part of the shard file contract.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). `bound` must be positive.
  uint64_t below(uint64_t bound);

  // Uniform real in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller, one value per call.
  double gaussian();

 private:
  std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

// Sub-seed for a (stage, purpose) pair:
//   splitmix64(splitmix64(seed ^ splitmix64(stage)) ^ fnv1a64(tag)).
uint64_t derive_seed(uint64_t seed, uint64_t stage, std::string_view tag);

// In-place Fisher-Yates: for i = n-1 down to 1, swap(i, below(i + 1)).
template <typename T>
void fisher_yates(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Permutation of [0, n) from Fisher-Yates over the identity.
std::vector<std::size_t> shuffled_indices(std::size_t n, uint64_t seed);

}  // namespace currikit

#endif  // CURRIKIT_RANDOM_H_
