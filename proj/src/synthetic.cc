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

// Synthetic labeled corpora with controlled relevant-sentence fractions.

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_set>

#include "relevkit/error.h"
#include "relevkit/scorer.h"
#include "relevkit/textseg.h"

namespace relevkit::scorer {

namespace {

using corpus::RelevanceLabel;

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

std::string make_word(Rng& rng, bool query_word) {
  static constexpr std::string_view kOnsets = "bcdfghjklmnprstvwz";
  static constexpr std::string_view kVowels = "aeiou";
  std::string w;
  const std::size_t syllables = rng.between(2, 3);
  for (std::size_t i = 0; i < syllables; ++i) {
    w += kOnsets[rng.below(kOnsets.size())];
    w += kVowels[rng.below(kVowels.size())];
  }
  // Query words end in a consonant cluster filler words never use.
  if (query_word) w += "x";
  return w;
}

std::vector<std::string> vocabulary(Rng& rng, std::size_t size,
                                    bool query_words) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  while (out.size() < size) {
    auto w = make_word(rng, query_words);
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::size_t> feasible_counts(const Band& band, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(n);
    if (f >= band.lo - 1e-12 && f <= band.hi + 1e-12) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> paragraph_sizes(Rng& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  std::size_t rest = n;
  while (rest > 0) {
    std::size_t take;
    if (rest <= 3) {
      take = rest;
    } else if (rest == 4) {
      take = 2;
    } else {
      take = rng.between(2, 3);
    }
    sizes.push_back(take);
    rest -= take;
  }
  return sizes;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (n_docs == 0) throw UsageError("n_docs must be positive");
  if (sentences_per_doc == 0) {
    throw UsageError("sentences_per_doc must be positive");
  }
  if (query_vocabulary == 0 || filler_vocabulary < 6) {
    throw UsageError("vocabularies are too small");
  }
  for (const Band* b : {&strong_band, &weak_band}) {
    if (b->lo > b->hi || b->lo < 0.0 || b->hi > 1.0) {
      throw UsageError("relevant-fraction band must satisfy 0 <= lo <= hi <= 1");
    }
  }
  if (!(strong_band.lo > weak_band.hi && weak_band.hi > 0.0)) {
    throw UsageError("bands must satisfy strong.lo > weak.hi > 0");
  }
  if (feasible_counts(strong_band, sentences_per_doc).empty() ||
      feasible_counts(weak_band, sentences_per_doc).empty() ||
      feasible_counts(weak_band, sentences_per_doc).back() == 0) {
    throw UsageError("no sentence count of the document falls in a band");
  }
}

std::vector<corpus::LabeledPair> synthesize_corpus(const SyntheticSpec& spec,
                                                   bool validate) {
  if (validate) spec.validate();
  if (spec.n_docs == 0 || spec.sentences_per_doc == 0) return {};
  Rng rng(spec.seed);
  const auto query_words = vocabulary(rng, spec.query_vocabulary, true);
  const auto filler_words = vocabulary(rng, spec.filler_vocabulary, false);
  const auto strong_counts = feasible_counts(spec.strong_band, spec.sentences_per_doc);
  const auto weak_counts = feasible_counts(spec.weak_band, spec.sentences_per_doc);
  if (strong_counts.empty() || weak_counts.empty()) {
    throw UsageError("no sentence count of the document falls in a band");
  }

  const std::size_t n = spec.sentences_per_doc;
  std::vector<corpus::LabeledPair> out;
  out.reserve(spec.n_docs);
  for (std::size_t d = 0; d < spec.n_docs; ++d) {
    corpus::LabeledPair pair;
    pair.label = corpus::kAllLabels[d % 3];
    char id[32];
    std::snprintf(id, sizeof id, "syn-%06zu", d + 1);
    pair.id = id;

    const std::size_t q1 = rng.below(query_words.size());
    std::vector<std::string> query{query_words[q1]};
    if (query_words.size() > 1 && rng.below(2) == 1) {
      std::size_t q2 = rng.below(query_words.size() - 1);
      if (q2 >= q1) ++q2;
      query.push_back(query_words[q2]);
    }
    for (const auto& w : query) {
      if (!pair.query.empty()) pair.query += ' ';
      pair.query += w;
    }

    std::size_t k = 0;
    if (pair.label == RelevanceLabel::kStrong) {
      k = strong_counts[rng.below(strong_counts.size())];
    } else if (pair.label == RelevanceLabel::kWeak) {
      k = weak_counts[rng.below(weak_counts.size())];
    }
    // Choose which k sentences are relevant (partial Fisher-Yates).
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(order[i], order[i + rng.below(n - i)]);
    }
    std::vector<bool> relevant(n, false);
    for (std::size_t i = 0; i < k; ++i) relevant[order[i]] = true;

    std::vector<std::string> sentences;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::string> words;
      const std::size_t filler = rng.between(4, 6);
      for (std::size_t w = 0; w < filler; ++w) {
        words.push_back(filler_words[rng.below(filler_words.size())]);
      }
      if (relevant[s]) {
        const std::size_t at = rng.below(words.size() + 1);
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(at),
                     query.begin(), query.end());
      }
      std::string text;
      for (const auto& w : words) {
        if (!text.empty()) text += ' ';
        text += w;
      }
      text[0] = static_cast<char>(text[0] - 'a' + 'A');
      text += '.';
      sentences.push_back(std::move(text));
    }

    std::size_t s = 0;
    for (std::size_t size : paragraph_sizes(rng, n)) {
      if (!pair.document.empty()) pair.document += "\n\n";
      for (std::size_t i = 0; i < size; ++i, ++s) {
        if (i > 0) pair.document += ' ';
        pair.document += sentences[s];
      }
    }
    out.push_back(std::move(pair));
  }
  return out;
}

double relevant_fraction(std::string_view query, std::string_view document) {
  std::set<std::string> terms;
  for (auto& t : textseg::tokenize(query)) terms.insert(std::move(t.normalized));
  const auto doc = textseg::segment(document);
  std::size_t hits = 0;
  for (const auto& sentence : doc.sentences) {
    std::set<std::string> present;
    for (const auto& t : sentence.tokens) present.insert(t.normalized);
    if (!terms.empty() &&
        std::includes(present.begin(), present.end(), terms.begin(),
                      terms.end())) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(doc.sentences.size());
}

}  // namespace relevkit::scorer
