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

#ifndef CURRIKIT_SCHEDULER_H_
#define CURRIKIT_SCHEDULER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "currikit/chunker.h"
#include "currikit/complexity.h"
#include "currikit/corpus.h"
#include "currikit/vocab.h"

namespace currikit {

enum class OrderingMode { kCurriculum, kNoCurriculum, kReversedCurriculum };

// Accepts "curriculum", "none" (or "no-curriculum") and "reversed".
OrderingMode parse_ordering_mode(std::string_view name);
std::string_view ordering_mode_name(OrderingMode mode);

// Curriculum: stable ascending sort by score. Reversed: the exact reverse of
// the curriculum permutation. NoCurriculum: seeded Fisher-Yates. Returns
// the permutation as indices into `scores`.
std::vector<std::size_t> order_chunks(std::span<const double> scores,
                                      OrderingMode mode, uint64_t seed);

// Exact rational in (0, 1].
struct Fraction {
  uint64_t num = 1;
  uint64_t den = 1;

  // "1/3", "1", or a finite decimal such as "0.25".
  static Fraction parse(std::string_view s);
  std::string str() const;
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
};

// cut_k = ceil(fraction_k * total); phase k is the ordered prefix [0, cut_k).
std::vector<std::size_t> phase_partition(std::size_t total,
                                         std::span<const Fraction> fractions);

struct Hyperparameters {
  double learning_rate = 1e-4;
  double weight_decay = 0.01;
  uint64_t warmup_steps = 10000;
  std::string optimizer = "AdamW";
  uint64_t batch_size = 256;
  uint64_t epochs = 50;
  double masking_rate = 0.15;
};

struct StagePlan {
  std::size_t context_size = 32;
  std::size_t epochs_per_phase = 3;
};

struct TrainingPlan {
  std::vector<StagePlan> stages = {{32, 3}, {128, 10}};
  std::vector<Fraction> phases = {{1, 3}, {2, 3}, {1, 1}};
  OrderingMode mode = OrderingMode::kCurriculum;
  uint64_t seed = 0;
  TailPolicy tail = TailPolicy::kDrop;
  std::size_t vocab_target = 40000;
  Hyperparameters hyperparameters;

  // Throws ConfigError: empty stages, zero context size, fractions not
  // strictly increasing in (0, 1] or not ending at 1, masking rate outside
  // (0, 1).
  void validate() const;
  nlohmann::ordered_json to_json() const;
  static TrainingPlan from_json(const nlohmann::json& j);
};

struct FileEntry {
  std::string path;  // relative to the output directory
  std::size_t chunks = 0;
  std::string sha256;
};

struct PhaseManifest {
  std::size_t index = 1;
  Fraction fraction;
  std::size_t cut = 0;
  std::vector<FileEntry> shards;  // cumulative: phase k lists phases 1..k
};

struct StageManifest {
  std::size_t index = 1;
  std::size_t context_size = 0;
  std::size_t chunks = 0;
  std::size_t dropped_pieces = 0;
  FileEntry scores;
  std::vector<PhaseManifest> phases;
};

struct ShardManifest {
  TrainingPlan plan;
  FileEntry vocab;
  std::optional<FileEntry> char_vocab;
  std::vector<StageManifest> stages;
  nlohmann::ordered_json config;    // fully resolved pipeline config
  nlohmann::ordered_json transfer;  // {"body": "copy", "head": "reinitialize", ...}

  nlohmann::ordered_json to_json() const;
  static ShardManifest from_json(const nlohmann::json& j);
};

ShardManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const ShardManifest& manifest, const std::filesystem::path& path);

// Recomputes every digest under `out_dir`; returns the paths that differ.
std::vector<std::string> verify_manifest(const ShardManifest& manifest,
                                         const std::filesystem::path& out_dir);

// Per stage: chunk the encoded corpus, score with a scaler fitted on that
// stage, order, cut into phases and write
//   stage<k>/scores.tsv       score of every chunk, in chunk order
//   stage<k>/phase<j>.tsv     chunks newly unlocked in phase j, in order
// plus vocab.tsv. The manifest is returned, not written.
ShardManifest build_plan(const Corpus& corpus, const UnigramModel& vocab,
                         const TrainingPlan& plan,
                         const std::filesystem::path& out_dir);

struct InspectedChunk {
  ChunkId id;
  double score = 0.0;
  std::size_t rank = 0;  // position in ascending score order
  std::string text;
};

struct InspectReport {
  std::vector<InspectedChunk> lowest;
  std::vector<InspectedChunk> middle;
  std::vector<InspectedChunk> highest;
  std::size_t requested = 0;
  bool truncated = false;  // k exceeded the number of chunks
};

// The k lowest-, middle- and highest-scoring chunks. `texts` is aligned
// with `scores`.
InspectReport inspect_extremes(std::span<const ScoredChunk> scores,
                               std::span<const std::string> texts, std::size_t k);

}  // namespace currikit

#endif  // CURRIKIT_SCHEDULER_H_
