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

#ifndef CURRIKIT_TRAINER_H_
#define CURRIKIT_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "currikit/corpus.h"
#include "currikit/vocab.h"

namespace currikit {

// A whitespace-delimited word with the boundary marker prefixed, and how
// often it occurs.
struct Pretoken {
  std::u32string text;
  uint64_t count = 0;
};

// Sorted by text, so every downstream reduction has a fixed order.
std::vector<Pretoken> collect_pretokens(const Corpus& corpus);

// Characters kept so that they cover `coverage` of the character mass,
// most frequent first. The boundary marker is always kept.
std::vector<char32_t> covered_chars(std::span<const Pretoken> pretokens,
                                    double coverage);

// One piece per covered character; logp = log relative frequency.
CharVocab build_char_vocab(const Corpus& corpus, double coverage = 0.9999);

// All characters plus the `seed_size` substrings of 2..max_piece_len
// characters with the largest frequency x length. Initial logp is the log
// of the (occurrence) count, normalized over the candidate set.
UnigramModel seed_candidates(std::span<const Pretoken> pretokens,
                             std::size_t max_piece_len, std::size_t seed_size);

struct EStepResult {
  std::vector<double> expected_counts;  // indexed by piece id
  double log_likelihood = 0.0;          // sum over pretokens of count * log Z
};

// Forward-backward over each pretoken's segmentation lattice. Throws
// CoverageError if a pretoken has a character with no single-character
// piece.
EStepResult e_step(const UnigramModel& model,
                   std::span<const Pretoken> pretokens);

struct EmStepResult {
  UnigramModel model;
  double log_likelihood = 0.0;  // of the input model
  std::vector<double> expected_counts;
};

// E-step then M-step: logp_i = log(c_i / sum c). Ordinary multi-character
// pieces with zero expected count are dropped; single characters are kept.
EmStepResult em_step(const UnigramModel& model,
                     std::span<const Pretoken> pretokens);

// Removes the pieces whose removal costs the least likelihood, keeping
// max(target_size, keep_ratio * size) entries. Characters and specials are
// never removed.
UnigramModel prune_once(const UnigramModel& model,
                        std::span<const Pretoken> pretokens,
                        std::span<const double> expected_counts,
                        double keep_ratio, std::size_t target_size);

struct TrainLog {
  std::vector<double> log_likelihoods;  // one per EM step, in order
  std::vector<std::size_t> sizes;       // vocabulary size after each round
};

// Alternates `em_iterations` EM steps with prune_once until the vocabulary
// has at most target_size entries, then refits. Throws ConfigError if the
// target is below the character floor.
UnigramModel prune(const UnigramModel& model,
                   std::span<const Pretoken> pretokens, double keep_ratio,
                   std::size_t target_size, std::size_t em_iterations = 2,
                   TrainLog* log = nullptr);

struct TrainerOptions {
  std::size_t target_size = 40000;  // specials included
  std::size_t max_piece_len = 16;
  std::size_t seed_size = 0;  // 0: 4 x target_size
  double coverage = 0.9999;
  double keep_ratio = 0.75;
  std::size_t em_iterations = 2;
};

UnigramModel train_unigram(const Corpus& corpus, const TrainerOptions& options,
                           TrainLog* log = nullptr);

}  // namespace currikit

#endif  // CURRIKIT_TRAINER_H_
