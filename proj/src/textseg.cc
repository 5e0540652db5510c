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

#include "relevkit/textseg.h"

#include "relevkit/error.h"
#include "relevkit/utf8.h"

namespace relevkit::textseg {

namespace {

using utf8::CodePoint;

bool is_ascii_terminator(char32_t c) { return c == '.' || c == '!' || c == '?'; }

bool is_wide_terminator(char32_t c) {
  return c == U'。' || c == U'！' || c == U'？' || c == U'；' || c == U'…' ||
         c == U'｡';
}

bool is_closer(char32_t c) {
  switch (c) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case '}':
    case U'”':
    case U'’':
    case U'」':
    case U'』':
    case U'）':
    case U'】':
    case U'》':
    case U'〉':
      return true;
    default:
      return false;
  }
}

// Byte ranges of paragraphs: maximal groups of lines that contain at least one
// non-whitespace code point.
std::vector<ByteSpan> paragraph_ranges(std::string_view text,
                                       const std::vector<CodePoint>& cps) {
  std::vector<ByteSpan> out;
  std::size_t line_begin = 0;
  bool line_blank = true;
  bool in_para = false;
  ByteSpan current;
  auto close_line = [&](std::size_t line_end) {
    if (line_blank) {
      if (in_para) {
        out.push_back(current);
        in_para = false;
      }
    } else {
      if (!in_para) {
        current.begin = line_begin;
        in_para = true;
      }
      current.end = line_end;
    }
  };
  for (const CodePoint& cp : cps) {
    if (cp.value == '\n') {
      close_line(cp.begin);
      line_begin = cp.end;
      line_blank = true;
    } else if (!utf8::is_space(cp.value)) {
      line_blank = false;
    }
  }
  close_line(text.size());
  if (in_para) out.push_back(current);
  return out;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t base) {
  std::vector<Token> tokens;
  const auto cps = utf8::decode(text);
  std::size_t i = 0;
  auto emit = [&](std::size_t begin, std::size_t end) {
    Token t;
    t.surface = std::string(text.substr(begin, end - begin));
    t.normalized = utf8::case_fold(t.surface);
    t.span = {base + begin, base + end};
    tokens.push_back(std::move(t));
  };
  while (i < cps.size()) {
    const char32_t c = cps[i].value;
    if (utf8::is_cjk(c)) {
      emit(cps[i].begin, cps[i].end);
      ++i;
    } else if (utf8::is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < cps.size() && utf8::is_word_char(cps[j].value) &&
             !utf8::is_cjk(cps[j].value)) {
        ++j;
      }
      emit(cps[i].begin, cps[j - 1].end);
      i = j;
    } else {
      ++i;
    }
  }
  return tokens;
}

std::size_t token_count(std::string_view text) { return tokenize(text).size(); }

SegmentedDocument segment(std::string_view document) {
  const auto cps = utf8::decode(document);
  SegmentedDocument doc;
  doc.source = std::string(document);

  auto add_sentence = [&](std::size_t begin, std::size_t end,
                          std::size_t paragraph) {
    Sentence s;
    s.span = {begin, end};
    s.text = doc.source.substr(begin, end - begin);
    s.tokens = tokenize(s.text, begin);
    s.index = doc.sentences.size();
    s.paragraph_index = paragraph;
    doc.paragraphs.back().push_back(s.index);
    doc.sentences.push_back(std::move(s));
  };

  std::size_t k = 0;  // cursor into cps
  for (const ByteSpan& para : paragraph_ranges(document, cps)) {
    const std::size_t paragraph = doc.paragraphs.size();
    doc.paragraphs.emplace_back();
    while (k < cps.size() && cps[k].begin < para.begin) ++k;

    bool open = false;
    std::size_t sent_begin = 0;
    std::size_t last_end = 0;  // end of last non-space code point
    while (k < cps.size() && cps[k].begin < para.end) {
      const char32_t c = cps[k].value;
      if (utf8::is_space(c)) {
        ++k;
        continue;
      }
      if (!open) {
        open = true;
        sent_begin = cps[k].begin;
      }
      if (is_ascii_terminator(c) || is_wide_terminator(c)) {
        bool wide = false;
        std::size_t j = k;
        while (j < cps.size() && cps[j].begin < para.end &&
               (is_ascii_terminator(cps[j].value) ||
                is_wide_terminator(cps[j].value) || is_closer(cps[j].value))) {
          wide = wide || is_wide_terminator(cps[j].value);
          ++j;
        }
        const std::size_t cluster_end = cps[j - 1].end;
        const bool at_end = j >= cps.size() || cps[j].begin >= para.end;
        if (wide || at_end || utf8::is_space(cps[j].value)) {
          add_sentence(sent_begin, cluster_end, paragraph);
          open = false;
        }
        last_end = cluster_end;
        k = j;
        continue;
      }
      last_end = cps[k].end;
      ++k;
    }
    if (open) add_sentence(sent_begin, last_end, paragraph);
  }

  if (doc.sentences.empty()) throw DataError("empty document");
  return doc;
}

}  // namespace relevkit::textseg
