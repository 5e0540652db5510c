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

#include <gtest/gtest.h>

#include <random>

#include "relevkit/error.h"
#include "test_util.h"

namespace relevkit::textseg {
namespace {

std::vector<std::string> sentence_texts(const SegmentedDocument& doc) {
  std::vector<std::string> out;
  for (const auto& s : doc.sentences) out.push_back(s.text);
  return out;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> normalized(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.normalized);
  return out;
}

TEST(SegmentTest, PunctuationAndBlankLine) {
  const auto doc = segment("A big cat. It sat.\n\nNew para here.");
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"A big cat.", "It sat.", "New para here."}));
  ASSERT_EQ(doc.paragraphs.size(), 2u);
  EXPECT_EQ(doc.paragraphs[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(doc.paragraphs[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(doc.sentences[2].paragraph_index, 1u);
}

TEST(SegmentTest, CjkTerminatorWithoutSpace) {
  const auto doc = segment("狗很可爱。猫也是。");
  EXPECT_EQ(doc.paragraphs.size(), 1u);
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"狗很可爱。", "猫也是。"}));
}

TEST(SegmentTest, TrailingTextFormsSentence) {
  const auto doc = segment("No terminal punctuation");
  EXPECT_EQ(doc.paragraphs.size(), 1u);
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"No terminal punctuation"}));
}

TEST(SegmentTest, EmptyDocumentIsAnError) {
  EXPECT_THROW(segment(""), DataError);
  try {
    segment(" \n\t\n ");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_STREQ(e.what(), "empty document");
  }
}

TEST(SegmentTest, AsciiTerminatorNeedsWhitespace) {
  const auto doc = segment("Version 1.5 is out.Really? Yes!\"Great.\" Done");
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"Version 1.5 is out.Really?",
                                      "Yes!\"Great.\"", "Done"}));
}

TEST(SegmentTest, SingleNewlineDoesNotSplitParagraph) {
  const auto doc = segment("First line\nstill first. Second.\n   \nThird");
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"First line\nstill first.", "Second.",
                                      "Third"}));
  EXPECT_EQ(doc.paragraphs.size(), 2u);
}

TEST(SegmentTest, ClosingQuoteStaysWithSentence) {
  const auto doc = segment("他说：“好。”然后走了。");
  EXPECT_EQ(sentence_texts(doc),
            (std::vector<std::string>{"他说：“好。”", "然后走了。"}));
}

TEST(TokenizeTest, WordSplitAndFold) {
  const auto tokens = tokenize("Beef hot-pot");
  EXPECT_EQ(surfaces(tokens), (std::vector<std::string>{"Beef", "hot", "pot"}));
  EXPECT_EQ(normalized(tokens), (std::vector<std::string>{"beef", "hot", "pot"}));
}

TEST(TokenizeTest, CjkPerCharacter) {
  const auto tokens = tokenize("樱花公园");
  EXPECT_EQ(surfaces(tokens),
            (std::vector<std::string>{"樱", "花", "公", "园"}));
}

TEST(TokenizeTest, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(TokenizeTest, MixedScriptsAndCaseFolding) {
  const auto tokens = tokenize("ÉCOLE Straße sakura公园 Москва ラーメン");
  EXPECT_EQ(normalized(tokens),
            (std::vector<std::string>{"école", "straße", "sakura", "公", "园",
                                      "москва", "ラ", "ー", "メ", "ン"}));
}

TEST(TokenCountTest, Examples) {
  EXPECT_EQ(token_count("a b c"), 3u);
  EXPECT_EQ(token_count(""), 0u);
  // "sakura" is one Latin run; 公 and 园 are one token each.
  EXPECT_EQ(token_count("sakura 公园"), 3u);
}

TEST(TokenizeTest, InvalidUtf8BytesAreSkipped) {
  const std::string text = std::string("ab") + '\xff' + "cd";
  EXPECT_EQ(surfaces(tokenize(text)), (std::vector<std::string>{"ab", "cd"}));
}

class SegmentPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20260101};
};

TEST_F(SegmentPropertyTest, StructuralInvariants) {
  for (int iter = 0; iter < 500; ++iter) {
    const std::string text = testing::random_document(rng_);
    const auto doc = segment(text);

    // Paragraphs partition the sentences contiguously and in order.
    std::size_t expected = 0;
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
      ASSERT_FALSE(doc.paragraphs[p].empty());
      for (std::size_t idx : doc.paragraphs[p]) {
        ASSERT_EQ(idx, expected++);
        ASSERT_EQ(doc.sentences[idx].paragraph_index, p);
      }
    }
    ASSERT_EQ(expected, doc.sentences.size());

    std::vector<int> owner(text.size(), -1);
    std::size_t total_tokens = 0;
    std::size_t prev_end = 0;
    for (const auto& s : doc.sentences) {
      ASSERT_LT(s.span.begin, s.span.end);
      ASSERT_GE(s.span.begin, prev_end);
      prev_end = s.span.end;
      ASSERT_EQ(text.substr(s.span.begin, s.span.size()), s.text);
      for (std::size_t b = s.span.begin; b < s.span.end; ++b) {
        owner[b] = static_cast<int>(s.index);
      }
      std::size_t tok_prev = s.span.begin;
      for (const auto& t : s.tokens) {
        ASSERT_LT(t.span.begin, t.span.end);
        ASSERT_GE(t.span.begin, tok_prev);
        ASSERT_LE(t.span.end, s.span.end);
        tok_prev = t.span.end;
        ASSERT_EQ(text.substr(t.span.begin, t.span.size()), t.surface);
      }
      total_tokens += s.tokens.size();
    }
    // Every non-whitespace byte belongs to a sentence.
    for (std::size_t b = 0; b < text.size(); ++b) {
      const unsigned char c = static_cast<unsigned char>(text[b]);
      if (c != ' ' && c != '\n' && c != '\t') {
        ASSERT_GE(owner[b], 0) << "byte " << b << " of: " << text;
      }
    }
    ASSERT_EQ(total_tokens, token_count(text));
  }
}

TEST_F(SegmentPropertyTest, ResegmentingIsIdempotent) {
  for (int iter = 0; iter < 300; ++iter) {
    const auto doc = segment(testing::random_document(rng_));
    std::string rebuilt;
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
      if (p > 0) rebuilt += "\n\n";
      for (std::size_t i = 0; i < doc.paragraphs[p].size(); ++i) {
        if (i > 0) rebuilt += ' ';
        rebuilt += doc.sentences[doc.paragraphs[p][i]].text;
      }
    }
    const auto again = segment(rebuilt);
    ASSERT_EQ(sentence_texts(again), sentence_texts(doc)) << rebuilt;
  }
}

TEST_F(SegmentPropertyTest, TokenizeDistributesOverWhitespace) {
  for (int iter = 0; iter < 300; ++iter) {
    const std::string x = testing::random_query(rng_);
    const std::string y = testing::random_query(rng_);
    auto joined = tokenize(x + " " + y);
    auto left = tokenize(x);
    auto right = tokenize(y);
    std::vector<std::string> expected = normalized(left);
    for (const auto& t : right) expected.push_back(t.normalized);
    ASSERT_EQ(normalized(joined), expected);
  }
}

}  // namespace
}  // namespace relevkit::textseg
