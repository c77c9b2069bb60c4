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

#ifndef CURRIKIT_VOCAB_H_
#define CURRIKIT_VOCAB_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "currikit/corpus.h"

namespace currikit {

using PieceId = int32_t;

// Reserved ids. Specials precede every ordinary piece in a vocabulary.
inline constexpr PieceId kPadId = 0;
inline constexpr PieceId kUnkId = 1;
inline constexpr PieceId kMaskId = 2;
inline constexpr PieceId kDocSeparatorId = 3;
inline constexpr PieceId kNumSpecials = 4;
inline constexpr std::array<std::string_view, kNumSpecials> kSpecialNames = {
    "<pad>", "<unk>", "<mask>", "<doc>"};

// Unknown characters score this far below the least likely piece.
inline constexpr double kUnkPenalty = 10.0;

struct Piece {
  std::string text;
  double logp = 0.0;
  bool operator==(const Piece&) const = default;
};

// Prefix trie over piece code points. Children live in one flat hash map
// keyed by (node, code point).
class PieceTrie {
 public:
  void insert(std::u32string_view key, PieceId id);

  // Calls fn(id, length) for every piece that is a prefix of text[pos:],
  // shortest first.
  template <typename Fn>
  void for_each_prefix(std::u32string_view text, std::size_t pos,
                       Fn&& fn) const {
    uint32_t node = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
      auto it = children_.find(key(node, text[i]));
      if (it == children_.end()) return;
      node = it->second;
      if (values_[node] >= 0) fn(values_[node], i - pos + 1);
    }
  }

 private:
  static uint64_t key(uint32_t node, char32_t c) {
    return (static_cast<uint64_t>(node) << 32) | c;
  }
  std::unordered_map<uint64_t, uint32_t> children_;
  std::vector<PieceId> values_ = {-1};
};

// Subword inventory with unigram log-probabilities.
//
// Invariants: ordinary piece strings are unique, non-empty, differ from the
// special names, and contain the word-boundary marker only as their first
// character; every logp is finite and <= 0.
class UnigramModel {
 public:
  UnigramModel() : UnigramModel(std::vector<Piece>{}) {}
  // `pieces` are the ordinary pieces, in id order starting at kNumSpecials.
  explicit UnigramModel(std::vector<Piece> pieces, double coverage = 1.0);

  // Vocabulary size, specials included.
  std::size_t size() const { return kNumSpecials + pieces_.size(); }
  std::size_t num_pieces() const { return pieces_.size(); }
  std::span<const Piece> pieces() const { return pieces_; }

  const std::string& text(PieceId id) const;
  // 0 for specials.
  double logp(PieceId id) const;
  std::u32string_view chars(PieceId id) const;
  bool is_special(PieceId id) const { return id >= 0 && id < kNumSpecials; }
  bool is_char_piece(PieceId id) const {
    return !is_special(id) && chars(id).size() == 1;
  }
  bool valid(PieceId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < size();
  }

  std::optional<PieceId> find(std::string_view piece) const;
  std::optional<PieceId> find_char(char32_t c) const;

  double unk_logp() const { return min_logp_ - kUnkPenalty; }
  double coverage() const { return coverage_; }
  std::size_t max_piece_chars() const { return max_chars_; }
  const PieceTrie& trie() const { return trie_; }

  bool operator==(const UnigramModel& other) const {
    return pieces_ == other.pieces_ && coverage_ == other.coverage_;
  }

 private:
  std::vector<Piece> pieces_;
  std::vector<std::u32string> chars_;
  std::unordered_map<std::string, PieceId> index_;
  std::unordered_map<char32_t, PieceId> char_index_;
  PieceTrie trie_;
  double coverage_ = 1.0;
  double min_logp_ = 0.0;
  std::size_t max_chars_ = 0;
};

// A vocabulary whose ordinary pieces are all single characters.
class CharVocab {
 public:
  explicit CharVocab(UnigramModel model);
  const UnigramModel& model() const { return model_; }

 private:
  UnigramModel model_;
};

struct Segmentation {
  std::vector<PieceId> ids;
  bool operator==(const Segmentation&) const = default;
};

// Maximum-likelihood segmentation of `chars` into pieces. Characters without
// a single-character piece consume kUnkId at unk_logp(). Ties prefer fewer
// pieces, then the lexicographically smallest piece at the leftmost
// difference. `excluded` removes one piece from the lattice.
Segmentation viterbi(std::u32string_view chars, const UnigramModel& model,
                     PieceId excluded = -1);

// Text as the lattice sees it: a leading marker, and every whitespace
// character replaced by the marker. Empty text stays empty.
std::u32string to_lattice_chars(std::string_view text);

// Segments UTF-8 text (see to_lattice_chars).
Segmentation encode_viterbi(std::string_view text, const UnigramModel& model);

// Sum of piece log-probabilities along a segmentation, left to right.
double path_logp(std::span<const PieceId> ids, const UnigramModel& model);

// Concatenated piece strings with markers rendered as spaces; the marker
// opening the text, or following a document separator, is dropped. The
// document separator renders as "\n", the unknown piece as U+2047, padding
// and mask as nothing. Throws Error on an out-of-range id.
std::string decode(std::span<const PieceId> ids, const UnigramModel& model);

// Encodes every document. Identical whitespace-delimited units are segmented
// once; the result equals encode_viterbi applied per document.
std::vector<Segmentation> encode_documents(const Corpus& corpus,
                                           const UnigramModel& model);

// Vocabulary file: header "#vocab<TAB>size<TAB>coverage", then one
// "piece<TAB>logprob" line per id, specials first.
std::string format_vocab(const UnigramModel& model);
UnigramModel parse_vocab(std::string_view contents);
void write_vocab(const UnigramModel& model, const std::filesystem::path& path);
UnigramModel read_vocab(const std::filesystem::path& path);

// Shortest decimal that round-trips.
std::string format_double(double v);
std::string format_float(float v);

}  // namespace currikit

#endif  // CURRIKIT_VOCAB_H_
