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

#ifndef CURRIKIT_CHUNKER_H_
#define CURRIKIT_CHUNKER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "currikit/corpus.h"
#include "currikit/vocab.h"

namespace currikit {

// Tokens per training example. Any positive value is accepted;
// is_standard() reports whether it is one of 16, 32, 64, 128, 256.
class ContextSize {
 public:
  explicit ContextSize(std::size_t n);
  std::size_t value() const { return n_; }
  bool is_standard() const;
  bool operator==(const ContextSize&) const = default;

 private:
  std::size_t n_;
};

struct ChunkId {
  uint32_t stage = 1;
  uint64_t ordinal = 0;

  std::string str() const;  // "<stage>:<ordinal>"
  static ChunkId parse(std::string_view s);
  auto operator<=>(const ChunkId&) const = default;
};

struct Provenance {
  uint64_t document = 0;   // document id
  std::size_t offset = 0;  // piece offset within the document
  bool operator==(const Provenance&) const = default;
};

struct TextChunk {
  ChunkId id;
  std::vector<PieceId> piece_ids;
  std::string surface_text;  // decode(piece_ids)
  Provenance provenance;     // of the first piece
};

// All documents' pieces concatenated, with kDocSeparatorId between
// consecutive documents. A separator belongs to the document before it.
class EncodedStream {
 public:
  EncodedStream() = default;
  EncodedStream(std::span<const Segmentation> docs,
                std::span<const uint64_t> doc_ids);

  std::span<const PieceId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  Provenance provenance(std::size_t position) const;

 private:
  std::vector<PieceId> ids_;
  std::vector<std::size_t> doc_begin_;
  std::vector<uint64_t> doc_ids_;
};

EncodedStream encode_stream(const Corpus& corpus, const UnigramModel& model);

enum class TailPolicy { kDrop, kKeepShort };
TailPolicy parse_tail_policy(std::string_view name);
std::string_view tail_policy_name(TailPolicy policy);

struct ChunkResult {
  std::vector<TextChunk> chunks;
  std::size_t dropped = 0;  // pieces discarded under kDrop
};

// Splits the stream, in order, into n-piece chunks. Chunk boundaries ignore
// document boundaries. Surface text is decoded when `model` is given.
ChunkResult chunk_stream(const EncodedStream& stream, ContextSize n,
                         TailPolicy tail, uint32_t stage = 1,
                         const UnigramModel* model = nullptr);

// Seeded Fisher-Yates permutation (see Rng).
std::vector<TextChunk> shuffle_chunks(std::vector<TextChunk> chunks,
                                      uint64_t seed);

// Shard file: one chunk per line,
//   chunk_id <TAB> length <TAB> space-separated piece ids <TAB> doc:offset
std::string format_shard_record(const TextChunk& chunk);
std::string format_shard(std::span<const TextChunk> chunks);
std::vector<TextChunk> parse_shard(std::string_view contents);
std::vector<TextChunk> read_shard(const std::filesystem::path& path);

}  // namespace currikit

#endif  // CURRIKIT_CHUNKER_H_
