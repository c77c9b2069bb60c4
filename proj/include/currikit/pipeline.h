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

#ifndef CURRIKIT_PIPELINE_H_
#define CURRIKIT_PIPELINE_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "currikit/config.h"
#include "currikit/corpus.h"
#include "currikit/error.h"
#include "currikit/scheduler.h"
#include "currikit/trainer.h"

namespace currikit {

// An error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Everything a `plan` run depends on. Defaults reproduce the two-stage
// 32 -> 128 schedule with thirds, a 40000-piece vocabulary and the
// reference optimizer settings.
struct PipelineConfig {
  std::vector<std::filesystem::path> corpus_paths;
  CorpusFormat format = CorpusFormat::kPlainLines;
  TrainerOptions vocab;  // vocab.target_size mirrors plan.vocab_target
  TrainingPlan plan;
  std::filesystem::path output_dir = "out";
  unsigned threads = 0;

  // Applies the keys present in `file`; relative paths resolve against
  // `base_dir`. Unknown keys are a ConfigError.
  void apply(const ConfigFile& file, const std::filesystem::path& base_dir);
  static PipelineConfig load(const std::filesystem::path& path);

  void validate() const;
  nlohmann::ordered_json to_json() const;
};

// ingest -> vocab-train -> encode -> chunk -> score -> order -> plan. Writes
// vocab.tsv, char_vocab.tsv, the stage directories and manifest.json into
// config.output_dir. Failures are rethrown as StageError.
ShardManifest run_pipeline(const PipelineConfig& config, std::ostream* log = nullptr);

}  // namespace currikit

#endif  // CURRIKIT_PIPELINE_H_
