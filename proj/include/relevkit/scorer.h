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

#ifndef RELEVKIT_SCORER_H_
#define RELEVKIT_SCORER_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "relevkit/corpus.h"
#include "relevkit/summarizer.h"

namespace relevkit::scorer {

// Transparent stand-in for a trained 3-class relevance model.
struct Thresholds {
  double irrelevant_below = 0.34;  // qf_coverage under this -> Irrelevant
  double strong_from = 0.5;        // doc_density at or above this -> Strong
};

struct ScorerFeatures {
  // Share of distinct query tokens found in the query-focused segment.
  double qf_coverage = 0.0;
  // Share of document-summary sentences holding at least one query token.
  double doc_density = 0.0;
};

struct Prediction {
  corpus::RelevanceLabel label = corpus::RelevanceLabel::kIrrelevant;
  double score = 0.0;  // 0.5 * qf_coverage + 0.5 * doc_density
};

ScorerFeatures features(std::string_view query,
                        const summarizer::MixSummary& mix);

Prediction score(std::string_view query, const summarizer::MixSummary& mix,
                 const Thresholds& thresholds = {});

// Baseline that only sees the query-focused segment. Document density is
// unknown and taken as 1 whenever the query is covered, so it can never say
// Weak.
Prediction score_query_focused_only(std::string_view query,
                                    std::string_view qf_summary,
                                    const Thresholds& thresholds = {});

struct Band {
  double lo = 0.0;
  double hi = 0.0;
};

struct SyntheticSpec {
  std::size_t n_docs = 300;
  std::size_t sentences_per_doc = 8;
  Band strong_band{0.6, 0.9};
  Band weak_band{0.1, 0.3};
  std::size_t query_vocabulary = 40;
  std::size_t filler_vocabulary = 400;
  std::uint64_t seed = 7;

  // Throws UsageError for empty corpora or overlapping/infeasible bands
  // (a band must contain some k / sentences_per_doc).
  void validate() const;
};

// Balanced corpus: labels cycle strong, weak, irrelevant. Relevant sentences
// embed the query verbatim; filler words come from a vocabulary disjoint from
// the query vocabulary. Sentences are grouped into paragraphs of two or three
// so the document summary sees every sentence. Pass validate=false to allow
// degenerate specs (bands must still be feasible).
std::vector<corpus::LabeledPair> synthesize_corpus(const SyntheticSpec& spec,
                                                   bool validate = true);

// Fraction of the document's sentences that contain every query token.
double relevant_fraction(std::string_view query, std::string_view document);

using ConfusionMatrix = std::array<std::array<std::uint64_t, 3>, 3>;

struct ExperimentReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double auc_mix = 0.0;
  double auc_qf_only = 0.0;
  // Rows: reference label, columns: predicted label (strong, weak, irrelevant).
  ConfusionMatrix confusion_mix{};
  ConfusionMatrix confusion_qf_only{};
  corpus::DatasetStats class_counts;

  nlohmann::ordered_json to_json() const;
};

struct ScoredPair {
  Prediction mix;
  Prediction qf_only;
};

// Scores already summarized pairs with both scorers.
std::vector<ScoredPair> score_pairs(
    std::span<const corpus::LabeledPair> pairs,
    std::span<const summarizer::MixSummary> summaries,
    const Thresholds& thresholds = {});

ExperimentReport evaluate_pairs(std::span<const corpus::LabeledPair> pairs,
                                std::span<const ScoredPair> scored);

// Synthesizes a corpus, summarizes each pair, scores it both ways and reports
// the multiclass AUC of each scorer. Deterministic for a given spec.
ExperimentReport run_experiment(const SyntheticSpec& spec,
                                const summarizer::SummaryBudget& budget,
                                const Thresholds& thresholds = {},
                                int workers = 1, bool validate = true);

}  // namespace relevkit::scorer

#endif  // RELEVKIT_SCORER_H_
