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

#ifndef CURRIKIT_CORPUS_H_
#define CURRIKIT_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace currikit {

enum class CorpusFormat {
  kPlainLines,          // one document per non-blank line
  kBlankLineDocuments,  // documents separated by one or more blank lines
};

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view corpus_format_name(CorpusFormat format);

struct DocumentSource {
  std::string path;
  std::size_t begin = 0;  // byte range in the original file
  std::size_t end = 0;
};

struct Document {
  uint64_t id = 0;  // ingestion ordinal, unique within a corpus
  DocumentSource source;
  std::string text;  // NFC, LF line endings
};

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t words = 0;
};

struct Corpus {
  std::vector<Document> documents;
  CorpusStats stats;
};

// Reads UTF-8 files in order. Throws IoError for unreadable paths and
// DecodeError (with the offending byte offset) for invalid UTF-8.
Corpus load_corpus(std::span<const std::filesystem::path> paths,
                   CorpusFormat format);

// Builds a corpus from in-memory texts, one document each. Texts are
// validated and normalized exactly as files are.
Corpus make_corpus(std::span<const std::string> texts);

enum class TokenKind { kWord, kPunctuation };

struct SurfaceToken {
  std::string text;
  TokenKind kind = TokenKind::kWord;
  std::size_t char_len = 0;  // scalar values in `text`
  std::size_t offset = 0;    // byte offset in the tokenized string

  bool is_word() const { return kind == TokenKind::kWord; }
  bool operator==(const SurfaceToken&) const = default;
};

// Words are maximal runs of characters outside the whitespace, punctuation
// and symbol classes; an apostrophe between two such characters stays inside
// the word. Every punctuation or symbol character is its own token.
std::vector<SurfaceToken> tokenize_surface(std::string_view text);

// Half-open byte range.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const SentenceSpan&) const = default;
};

// Boundaries fall after one of . ! ? … followed by whitespace or the end of
// text, and after newlines. Trailing whitespace stays with the sentence it
// follows, so the spans partition `text`.
std::vector<SentenceSpan> split_sentences(std::string_view text);

}  // namespace currikit

#endif  // CURRIKIT_CORPUS_H_
