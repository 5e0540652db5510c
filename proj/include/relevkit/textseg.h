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

#ifndef RELEVKIT_TEXTSEG_H_
#define RELEVKIT_TEXTSEG_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace relevkit::textseg {

// Half-open byte range into a source text.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct Token {
  std::string surface;
  std::string normalized;  // case-folded surface
  ByteSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;  // spans are relative to the document source
  std::size_t index = 0;
  std::size_t paragraph_index = 0;
  ByteSpan span;
};

struct SegmentedDocument {
  std::string source;
  // Each paragraph lists the indices of its sentences in order.
  std::vector<std::vector<std::size_t>> paragraphs;
  std::vector<Sentence> sentences;
};

// Splits text into tokens: maximal runs of letters/digits, except that every
// Han/Kana code point is a token by itself. Everything else is dropped.
// Spans are offset by `base` so sentence tokens can point into the document.
std::vector<Token> tokenize(std::string_view text, std::size_t base = 0);

std::size_t token_count(std::string_view text);

// Paragraphs are separated by blank lines. Sentences end after a run of
// terminators: ASCII . ! ? need trailing whitespace or paragraph end,
// full-width terminators (。！？；…) end a sentence unconditionally. Closing
// quotes and brackets directly after a terminator stay with the sentence.
// Throws DataError("empty document") for whitespace-only input.
SegmentedDocument segment(std::string_view document);

}  // namespace relevkit::textseg

#endif  // RELEVKIT_TEXTSEG_H_
