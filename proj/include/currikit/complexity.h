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

#ifndef CURRIKIT_COMPLEXITY_H_
#define CURRIKIT_COMPLEXITY_H_

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "currikit/chunker.h"
#include "currikit/corpus.h"

namespace currikit {

// Column order of every feature vector and score file.
enum Feature : Eigen::Index {
  kTypeTokenRatio = 0,
  kMeanWordRarity,
  kMaxWordRarity,
  kPunctuationDensity,
  kMeanSentenceLength,  // words per sentence
  kMeanWordLength,      // characters per word
  kNumFeatures,
};

inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    "ttr", "mean_rarity", "max_rarity", "punct_density", "mean_sent_len",
    "mean_word_len"};

template <typename Scalar>
using BasicFeatureVector = Eigen::Matrix<Scalar, kNumFeatures, 1>;
using FeatureVector = BasicFeatureVector<double>;

// One row per text.
template <typename Scalar>
using BasicFeatureMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, kNumFeatures, Eigen::RowMajor>;
using FeatureMatrix = BasicFeatureMatrix<double>;

// Lowercased word counts over a whole corpus. Rarity is
// 1 - (log c - log_min) / (log_max - log_min), natural log.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::unordered_map<std::string, uint64_t> counts);

  uint64_t count(std::string_view lowercased) const;
  uint64_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  double log_min() const { return log_min_; }
  double log_max() const { return log_max_; }
  bool empty() const { return counts_.empty(); }
  const std::unordered_map<std::string, uint64_t>& counts() const {
    return counts_;
  }

 private:
  std::unordered_map<std::string, uint64_t> counts_;
  uint64_t total_ = 0;
  double log_min_ = 0.0;
  double log_max_ = 0.0;
};

// Counts lowercased word tokens; punctuation is ignored. Throws
// EmptyCorpusError when the corpus has no words.
FrequencyTable build_frequency_table(const Corpus& corpus);

// Out-of-vocabulary words score 1; when every count is equal, 0.
double word_rarity(std::string_view word, const FrequencyTable& table);

// The six raw features. A text without words yields zero for every feature
// except punctuation density.
FeatureVector compute_features(std::span<const SurfaceToken> tokens,
                               std::span<const SentenceSpan> sentences,
                               const FrequencyTable& table);

FeatureVector text_features(std::string_view text, const FrequencyTable& table);

// Per-feature min/max over a dataset. transform() maps each feature to
// (x - min) / (max - min) clamped to [0, 1], or 0 where max == min.
template <typename Scalar>
class MinMaxScaler {
 public:
  using Vector = BasicFeatureVector<Scalar>;

  MinMaxScaler(Vector min, Vector max) : min_(std::move(min)), max_(std::move(max)) {}

  static MinMaxScaler fit(const BasicFeatureMatrix<Scalar>& rows) {
    return {rows.colwise().minCoeff().transpose(),
            rows.colwise().maxCoeff().transpose()};
  }

  Vector transform(const Vector& x) const {
    const auto range = (max_ - min_).array();
    const auto scaled = ((x - min_).array() / range).max(Scalar(0)).min(Scalar(1));
    return (range > Scalar(0)).select(scaled, Scalar(0)).matrix();
  }

  const Vector& min() const { return min_; }
  const Vector& max() const { return max_; }

 private:
  Vector min_;
  Vector max_;
};

// Throws Error on an empty dataset.
MinMaxScaler<double> fit_minmax(const FeatureMatrix& rows);

struct ComplexityScore {
  double value = 0.0;  // mean of the six scaled features
};

ComplexityScore score(const FeatureVector& raw, const MinMaxScaler<double>& scaler);

struct ScoredChunk {
  ChunkId id;
  FeatureVector raw;
  FeatureVector scaled;
  double score = 0.0;
};

// Features per chunk surface text, a scaler fitted on all of them, and the
// resulting scores.
std::vector<ScoredChunk> score_chunks(std::span<const TextChunk> chunks,
                                      const FrequencyTable& table);

// Score file: chunk_id, six raw features, six scaled features, score;
// tab-separated, reals with 9 significant digits.
std::string format_scores(std::span<const ScoredChunk> scores);
std::vector<ScoredChunk> parse_scores(std::string_view contents);
std::vector<ScoredChunk> read_scores(const std::filesystem::path& path);

}  // namespace currikit

#endif  // CURRIKIT_COMPLEXITY_H_
