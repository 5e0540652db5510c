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

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "relevkit/error.h"
#include "relevkit/prompts.h"
#include "relevkit/providers.h"
#include "relevkit/textseg.h"
#include "relevkit/utf8.h"

namespace relevkit::augment {

namespace {

const std::unordered_map<std::string_view, std::string_view>& synonyms() {
  static const std::unordered_map<std::string_view, std::string_view> kMap = {
      {"beef", "cattle"},         {"pot", "cauldron"},
      {"hotpot", "steamboat"},    {"cheap", "affordable"},
      {"restaurant", "eatery"},   {"cafe", "coffeehouse"},
      {"park", "garden"},         {"photo", "picture"},
      {"photos", "pictures"},     {"big", "large"},
      {"small", "little"},        {"mini", "tiny"},
      {"shop", "store"},          {"food", "cuisine"},
      {"noodle", "ramen"},        {"noodles", "ramen"},
      {"spicy", "fiery"},         {"near", "close"},
      {"best", "top"},            {"kids", "children"},
      {"trip", "journey"},        {"hotel", "inn"},
      {"quiet", "peaceful"},      {"view", "scenery"},
      {"flower", "blossom"},      {"flowers", "blossoms"},
      {"snack", "bite"},          {"snacks", "bites"},
      {"street", "road"},         {"museum", "gallery"},
  };
  return kMap;
}

const std::unordered_map<std::string_view, std::string_view>& antonyms() {
  static const std::unordered_map<std::string_view, std::string_view> kMap = {
      {"hot", "cold"},       {"cheap", "expensive"}, {"big", "small"},
      {"small", "big"},      {"mini", "giant"},      {"quiet", "noisy"},
      {"new", "old"},        {"old", "new"},         {"spicy", "mild"},
      {"best", "worst"},     {"near", "far"},        {"indoor", "outdoor"},
      {"outdoor", "indoor"}, {"open", "closed"},     {"pot", "snacks"},
      {"vegetarian", "meat"}, {"day", "night"},      {"summer", "winter"},
  };
  return kMap;
}

const std::unordered_set<std::string_view>& stopwords() {
  static const std::unordered_set<std::string_view> kSet = {
      "a",    "an",   "and",  "are",  "as",    "at",   "be",   "but",
      "by",   "for",  "from", "has",  "have",  "i",    "in",   "is",
      "it",   "its",  "of",   "on",   "or",    "so",   "that", "the",
      "their", "there", "these", "this", "to", "was",  "were", "with",
      "you",  "your", "my",   "me",   "we",    "our",  "they", "them",
      "he",   "she",  "her",  "his",  "very",  "only", "all",  "also",
      "just", "than", "then", "not",  "no",    "can",  "will", "would",
      "s",    "t",    "的",   "了",   "是",    "在",   "我",   "也",
      "很",   "和",   "有",   "就",   "都",    "这",   "那",   "你",
  };
  return kSet;
}

std::vector<std::string> normalized_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : textseg::tokenize(text)) out.push_back(std::move(t.normalized));
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Pronounceable pseudo-word derived from a hash.
std::string pseudo_word(std::uint64_t h) {
  static constexpr std::string_view kOnsets = "bdfgklmnprstvz";
  static constexpr std::string_view kVowels = "aeiou";
  std::string out;
  const int syllables = 2 + static_cast<int>(h % 2);
  h /= 2;
  for (int i = 0; i < syllables; ++i) {
    out += kOnsets[h % kOnsets.size()];
    h /= kOnsets.size();
    out += kVowels[h % kVowels.size()];
    h /= kVowels.size();
  }
  return out;
}

class MockProvider : public LlmProvider {
 public:
  explicit MockProvider(std::uint64_t seed) : seed_(seed) {}

  std::string complete(const std::string& prompt) override {
    const auto task = detect_task(prompt);
    const auto target = extract_target(prompt);
    if (!task || !target) {
      throw ProviderError("mock provider: unrecognized prompt", false);
    }
    const std::uint64_t h =
        stable_hash(prompt, stable_hash(std::to_string(seed_)));
    switch (*task) {
      case PromptTask::kSynonym:
        return synonym_lines(*target, h);
      case PromptTask::kAntonym:
        return antonym_line(*target, h);
      case PromptTask::kKeywords:
        return keyword_line(*target);
    }
    return {};
  }

  std::string provider_name() const override { return "mock"; }
  std::string model_name() const override {
    return "mock-" + std::to_string(seed_);
  }

 private:
  std::string synonym_lines(const std::string& query, std::uint64_t h) const {
    const auto words = normalized_tokens(query);
    if (words.empty()) return {};
    const std::string original = join(words);
    const std::size_t n = words.size();

    std::vector<std::string> candidates;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t i = (h + r) % n;
      auto it = synonyms().find(words[i]);
      if (it == synonyms().end()) continue;
      auto replaced = words;
      replaced[i] = std::string(it->second);
      candidates.push_back(join(replaced));
    }
    if (n >= 2) {
      auto rotated = words;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      candidates.push_back(join(rotated));
    }
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t i = (h + r) % n;
      auto replaced = words;
      replaced[i] = pseudo_word(stable_hash(words[i], h));
      candidates.push_back(join(replaced));
    }

    const std::size_t wanted = 1 + (h >> 16) % 3;
    std::string out;
    std::unordered_set<std::string> emitted;
    for (const auto& c : candidates) {
      if (emitted.size() == wanted) break;
      if (c == original || !emitted.insert(c).second) continue;
      out += c;
      out += '\n';
    }
    return out;
  }

  std::string antonym_line(const std::string& query, std::uint64_t h) const {
    auto words = normalized_tokens(query);
    if (words.empty()) return {};
    const std::size_t n = words.size();
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t i = (h + r) % n;
      auto it = antonyms().find(words[i]);
      if (it != antonyms().end()) {
        words[i] = std::string(it->second);
        return join(words) + '\n';
      }
    }
    const std::size_t i = h % n;
    words[i] = "not " + words[i];
    return join(words) + '\n';
  }

  std::string keyword_line(const std::string& document) const {
    std::unordered_map<std::string, std::size_t> freq;
    std::vector<std::string> order;
    for (auto& w : normalized_tokens(document)) {
      if (stopwords().contains(w)) continue;
      if (freq[w]++ == 0) order.push_back(std::move(w));
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string& a, const std::string& b) {
                       return freq[a] > freq[b];
                     });
    if (order.size() > 3) order.resize(3);
    std::string out;
    for (const auto& w : order) {
      if (!out.empty()) out += '>';
      out += w;
    }
    return out + '\n';
  }

  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<LlmProvider> mock_provider(std::uint64_t seed) {
  return std::make_unique<MockProvider>(seed);
}

}  // namespace relevkit::augment
