// Copyright 2026 The relevkit Authors
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

#ifndef RELEVKIT_UTF8_H_
#define RELEVKIT_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace relevkit::utf8 {

// A decoded code point and the byte range it occupies. Ill-formed bytes
// decode to U+FFFD one byte at a time.
struct CodePoint {
  char32_t value;
  std::size_t begin;
  std::size_t end;
};

bool is_valid(std::string_view text);

std::vector<CodePoint> decode(std::string_view text);

void append(std::string& out, char32_t cp);

// Simple (per code point) Unicode case folding.
std::string case_fold(std::string_view text);

// Letters, digits and combining marks.
bool is_word_char(char32_t cp);

// Ideographic scripts tokenized one code point at a time: Han, Hiragana,
// Katakana.
bool is_cjk(char32_t cp);

bool is_space(char32_t cp);

// Strips Unicode whitespace from both ends.
std::string_view trim(std::string_view text);

}  // namespace relevkit::utf8

#endif  // RELEVKIT_UTF8_H_
