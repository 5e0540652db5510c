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

#ifndef RELEVKIT_SUMMARIZER_H_
#define RELEVKIT_SUMMARIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relevkit/textseg.h"

namespace relevkit::summarizer {

// Token budgets for the two summary segments. Counts use textseg tokens, not
// the downstream model's subword vocabulary.
struct SummaryBudget {
  std::size_t query_focused_max = 128;
  std::size_t doc_summary_max = 64;
  std::size_t total_max = 192;
  std::string separator = "[SEP]";

  // Throws UsageError unless every limit is positive and
  // query_focused_max + doc_summary_max <= total_max.
  void validate() const;
};

// Sentences selected for one summary segment, joined with single spaces and
// cut after the budget-th token. `pieces` holds the emitted text of each
// sentence (the last one possibly truncated) and `sentence_indices` the
// sentences they came from.
struct Extract {
  std::string text;
  std::vector<std::size_t> sentence_indices;
  std::vector<std::string> pieces;
};

struct MixSummary {
  std::string query_focused;
  std::string doc_summary;
  std::string combined;
  std::vector<std::size_t> selected_sentence_indices;
  std::vector<std::size_t> doc_summary_indices;
  std::vector<std::string> doc_summary_sentences;
};

// Distinct normalized query tokens in first-occurrence order.
std::vector<std::string> query_terms(std::string_view query);

// Joins the given sentences (ascending indices) and truncates at `max_tokens`.
Extract join_truncated(const textseg::SegmentedDocument& doc,
                       std::span<const std::size_t> indices,
                       std::size_t max_tokens);

// Sentence selection for the query-focused segment, before truncation.
//
// Seeds: for every query term not yet covered by an already selected
// sentence, the earliest sentence containing it. Expansion: round-robin over
// the seeds in selection order, each seed's contiguous selected block takes
// its preceding then its following unselected neighbour. Expansion stops at
// the first neighbour that would push the selection past `max_tokens`, or when
// no block has neighbours left. The budget is checked per step, so seeds alone
// may already exceed it; the join truncates those.
std::vector<std::size_t> select_query_focused(
    std::span<const std::string> terms, const textseg::SegmentedDocument& doc,
    std::size_t max_tokens);

// Throws DataError("empty query") for a blank query. Returns an empty extract
// when no query term occurs in the document.
Extract query_focused_summary(std::string_view query,
                              const textseg::SegmentedDocument& doc,
                              const SummaryBudget& budget);

// First three sentences of every paragraph, in order, truncated at
// doc_summary_max.
Extract document_summary(const textseg::SegmentedDocument& doc,
                         const SummaryBudget& budget);

// `combined` is query_focused + " " + separator + " " + doc_summary; when the
// query-focused segment is empty it starts with the separator.
std::string combine(std::string_view query_focused, std::string_view separator,
                    std::string_view doc_summary);

MixSummary mix_summary(std::string_view query, std::string_view doc_text,
                       const SummaryBudget& budget);

}  // namespace relevkit::summarizer

#endif  // RELEVKIT_SUMMARIZER_H_
