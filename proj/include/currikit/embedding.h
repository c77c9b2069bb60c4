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

#ifndef CURRIKIT_EMBEDDING_H_
#define CURRIKIT_EMBEDDING_H_

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "currikit/error.h"

namespace currikit {

// One embedding row per vocabulary piece, rows in vocabulary order.
template <typename Scalar>
class BasicEmbeddingMatrix {
 public:
  using Rows = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  BasicEmbeddingMatrix(std::vector<std::string> vocab, Rows rows)
      : vocab_(std::move(vocab)), rows_(std::move(rows)) {
    if (static_cast<Eigen::Index>(vocab_.size()) != rows_.rows()) {
      throw Error("embedding matrix: " + std::to_string(vocab_.size()) +
                  " pieces but " + std::to_string(rows_.rows()) + " rows");
    }
    if (rows_.cols() <= 0) throw Error("embedding matrix: dimension must be positive");
    if (!rows_.allFinite()) throw Error("embedding matrix: non-finite entry");
  }

  const std::vector<std::string>& vocab() const { return vocab_; }
  const Rows& rows() const { return rows_; }
  Eigen::Index size() const { return rows_.rows(); }
  Eigen::Index dim() const { return rows_.cols(); }
  auto row(Eigen::Index i) const { return rows_.row(i); }

  bool operator==(const BasicEmbeddingMatrix& o) const {
    return vocab_ == o.vocab_ && rows_.rows() == o.rows_.rows() &&
           rows_.cols() == o.rows_.cols() && rows_ == o.rows_;
  }

 private:
  std::vector<std::string> vocab_;
  Rows rows_;
};

using EmbeddingMatrix = BasicEmbeddingMatrix<float>;

// Embedding file: "vocab_size<TAB>dim", then "piece<TAB>v1 v2 ... v_dim" per
// row with shortest round-trip decimals. Parse errors are FormatError with
// the 1-based line number.
std::string format_embeddings(const EmbeddingMatrix& matrix);
EmbeddingMatrix parse_embeddings(std::string_view contents);
void write_embeddings(const EmbeddingMatrix& matrix, const std::filesystem::path& path);
EmbeddingMatrix read_embeddings(const std::filesystem::path& path);

// N(0, stddev^2) entries drawn row-major from Rng(seed).
EmbeddingMatrix random_embeddings(std::vector<std::string> vocab, Eigen::Index dim,
                                  uint64_t seed, double stddev = 0.02);

}  // namespace currikit

#endif  // CURRIKIT_EMBEDDING_H_
