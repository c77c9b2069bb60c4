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

#ifndef CURRIKIT_TRANSFER_H_
#define CURRIKIT_TRANSFER_H_

#include <cstddef>
#include <cstdint>

#include "json.hpp"

#include "currikit/embedding.h"
#include "currikit/vocab.h"

namespace currikit {

struct TransferReport {
  std::size_t copied = 0;    // single-character pieces copied verbatim
  std::size_t summed = 0;    // pieces built as a sum of character rows
  std::size_t fallback = 0;  // summed pieces with characters missing from the source
  std::size_t specials_copied = 0;
  std::size_t specials_reinitialized = 0;
  // The output head is never transferred.
  static constexpr const char* kHeadAction = "reinitialize";
  static constexpr const char* kBodyAction = "copy";

  std::size_t total() const {
    return copied + summed + specials_copied + specials_reinitialized;
  }
  nlohmann::ordered_json to_json() const;
};

struct TransferResult {
  EmbeddingMatrix embeddings;
  TransferReport report;
};

// Builds target-vocabulary embeddings from a character-level table.
//
// Single-character pieces found in the source are copied. Every other piece
// is the left-to-right sum of its characters' rows, accumulated in double
// and rounded to float once; characters absent from the source add nothing
// and mark the piece as a fallback. Specials are copied by name when the
// source has them, otherwise drawn from N(0, 0.02^2) seeded by `seed`.
//
// Throws Error if the source has a multi-character ordinary piece, if the
// dimension differs from `expected_dim` (when non-zero), or if the target
// has no ordinary pieces.
TransferResult transfer_embeddings(const EmbeddingMatrix& char_emb,
                                   const UnigramModel& target, uint64_t seed = 0,
                                   Eigen::Index expected_dim = 0);

}  // namespace currikit

#endif  // CURRIKIT_TRANSFER_H_
