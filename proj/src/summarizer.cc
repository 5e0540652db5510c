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

#include "relevkit/summarizer.h"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "relevkit/error.h"
#include "relevkit/utf8.h"

namespace relevkit::summarizer {

using textseg::SegmentedDocument;
using textseg::Sentence;

void SummaryBudget::validate() const {
  if (query_focused_max == 0 || doc_summary_max == 0 || total_max == 0) {
    throw UsageError("summary budgets must be positive");
  }
  if (query_focused_max + doc_summary_max > total_max) {
    throw UsageError("query-focused and document budgets (" +
                     std::to_string(query_focused_max) + " + " +
                     std::to_string(doc_summary_max) +
                     ") exceed the total budget " + std::to_string(total_max));
  }
}

std::vector<std::string> query_terms(std::string_view query) {
  std::vector<std::string> terms;
  std::unordered_set<std::string> seen;
  for (auto& token : textseg::tokenize(query)) {
    if (seen.insert(token.normalized).second) {
      terms.push_back(std::move(token.normalized));
    }
  }
  return terms;
}

Extract join_truncated(const SegmentedDocument& doc,
                       std::span<const std::size_t> indices,
                       std::size_t max_tokens) {
  Extract out;
  std::size_t used = 0;
  for (std::size_t index : indices) {
    const Sentence& s = doc.sentences[index];
    std::string piece;
    bool truncated = false;
    if (used + s.tokens.size() <= max_tokens) {
      piece = s.text;
      used += s.tokens.size();
    } else {
      const std::size_t keep = max_tokens - used;
      if (keep == 0) break;
      const std::size_t cut = s.tokens[keep - 1].span.end - s.span.begin;
      piece = s.text.substr(0, cut);
      used = max_tokens;
      truncated = true;
    }
    if (!out.text.empty()) out.text += ' ';
    out.text += piece;
    out.pieces.push_back(std::move(piece));
    out.sentence_indices.push_back(index);
    if (truncated) break;
  }
  return out;
}

std::vector<std::size_t> select_query_focused(
    std::span<const std::string> terms, const SegmentedDocument& doc,
    std::size_t max_tokens) {
  const std::size_t n = doc.sentences.size();
  std::vector<std::unordered_set<std::string>> token_sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : doc.sentences[i].tokens) {
      token_sets[i].insert(t.normalized);
    }
  }

  std::vector<bool> selected(n, false);
  std::vector<std::size_t> seeds;
  std::size_t used = 0;
  for (const std::string& term : terms) {
    const bool covered = std::any_of(seeds.begin(), seeds.end(),
                                     [&](std::size_t s) {
                                       return token_sets[s].contains(term);
                                     });
    if (covered) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (token_sets[i].contains(term)) {
        seeds.push_back(i);
        selected[i] = true;
        used += doc.sentences[i].tokens.size();
        break;
      }
    }
  }

  auto neighbour = [&](std::size_t seed, bool before) -> std::optional<std::size_t> {
    if (before) {
      std::size_t i = seed;
      while (i > 0 && selected[i - 1]) --i;
      if (i == 0) return std::nullopt;
      return i - 1;
    }
    std::size_t i = seed;
    while (i + 1 < n && selected[i + 1]) ++i;
    if (i + 1 >= n) return std::nullopt;
    return i + 1;
  };

  // One round: every seed block tries to take its previous then its next
  // neighbour. Returns false once a neighbour no longer fits.
  bool grew = false;
  auto round = [&]() {
    for (std::size_t seed : seeds) {
      for (bool before : {true, false}) {
        auto next = neighbour(seed, before);
        if (!next) continue;
        const std::size_t cost = doc.sentences[*next].tokens.size();
        if (used + cost > max_tokens) return false;
        selected[*next] = true;
        used += cost;
        grew = true;
      }
    }
    return true;
  };
  do {
    grew = false;
  } while (round() && grew);

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (selected[i]) out.push_back(i);
  }
  return out;
}

Extract query_focused_summary(std::string_view query,
                              const SegmentedDocument& doc,
                              const SummaryBudget& budget) {
  if (utf8::trim(query).empty()) throw DataError("empty query");
  const auto terms = query_terms(query);
  const auto indices =
      select_query_focused(terms, doc, budget.query_focused_max);
  return join_truncated(doc, indices, budget.query_focused_max);
}

Extract document_summary(const SegmentedDocument& doc,
                         const SummaryBudget& budget) {
  std::vector<std::size_t> indices;
  for (const auto& paragraph : doc.paragraphs) {
    const std::size_t take = std::min<std::size_t>(3, paragraph.size());
    indices.insert(indices.end(), paragraph.begin(), paragraph.begin() + take);
  }
  return join_truncated(doc, indices, budget.doc_summary_max);
}

std::string combine(std::string_view query_focused, std::string_view separator,
                    std::string_view doc_summary) {
  std::string out;
  out.reserve(query_focused.size() + separator.size() + doc_summary.size() + 2);
  if (!query_focused.empty()) {
    out += query_focused;
    out += ' ';
  }
  out += separator;
  out += ' ';
  out += doc_summary;
  return out;
}

MixSummary mix_summary(std::string_view query, std::string_view doc_text,
                       const SummaryBudget& budget) {
  if (utf8::trim(query).empty()) throw DataError("empty query");
  const SegmentedDocument doc = textseg::segment(doc_text);
  Extract qf = query_focused_summary(query, doc, budget);
  Extract ds = document_summary(doc, budget);

  MixSummary mix;
  mix.combined = combine(qf.text, budget.separator, ds.text);
  mix.query_focused = std::move(qf.text);
  mix.selected_sentence_indices = std::move(qf.sentence_indices);
  mix.doc_summary = std::move(ds.text);
  mix.doc_summary_indices = std::move(ds.sentence_indices);
  mix.doc_summary_sentences = std::move(ds.pieces);
  return mix;
}

}  // namespace relevkit::summarizer
