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

#ifndef CURRIKIT_UNICODE_H_
#define CURRIKIT_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace currikit::unicode {

// Marks the start of a whitespace-delimited word inside subword pieces.
inline constexpr char32_t kWordBoundary = U'▁';

// Decodes UTF-8 into code points. Throws DecodeError naming the byte
// offset of the first ill-formed sequence.
std::u32string decode_utf8(std::string_view bytes);

// Throws DecodeError if `bytes` is not well-formed UTF-8.
void validate_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view chars);
void append_utf8(std::string& out, char32_t c);
std::string encode_utf8(char32_t c);

// Number of scalar values in a well-formed UTF-8 string.
std::size_t count_chars(std::string_view bytes);

// Canonical composition (NFC). Input must be well-formed UTF-8.
std::string nfc(std::string_view bytes);

bool is_whitespace(char32_t c);

// General categories P* and S*.
bool is_punct_or_symbol(char32_t c);

// Simple (one-to-one) lowercase mapping.
char32_t to_lower(char32_t c);
std::string lowercase(std::string_view bytes);

}  // namespace currikit::unicode

#endif  // CURRIKIT_UNICODE_H_
