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

#ifndef CURRIKIT_ERROR_H_
#define CURRIKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace currikit {

// Base class for every error raised by the library. Each subclass maps to a
// stage of the pipeline so the CLI can report where a run failed.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid UTF-8. `offset` is the byte offset of the first bad byte.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Malformed vocabulary, embedding, shard or score file.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// A training word contains a character the model cannot segment.
class CoverageError : public Error {
 public:
  using Error::Error;
};

}  // namespace currikit

#endif  // CURRIKIT_ERROR_H_
