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

#ifndef RELEVKIT_AUGMENT_H_
#define RELEVKIT_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relevkit/corpus.h"
#include "relevkit/error.h"
#include "relevkit/llm_provider.h"

namespace relevkit::augment {

enum class ProvenanceKind { kSynonymRewrite, kAntonymRewrite, kKeywordGeneration };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kSynonymRewrite;
  int rank = 0;  // 1..3 for kKeywordGeneration, 0 otherwise

  // "synonym_rewrite", "antonym_rewrite", "keyword_generation:<rank>".
  std::string to_string() const;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct AugmentedSample {
  corpus::LabeledPair pair;
  Provenance provenance;
  std::string source_id;
};

// Output record: the corpus schema plus "provenance" and "source_id".
nlohmann::ordered_json sample_to_json(const AugmentedSample& sample);

// Dedup key component: normalized tokens joined by single spaces.
std::string normalized_query(std::string_view query);

// Synonym rewrites keep the source label. Candidates that are empty, equal
// the source query after case folding, or repeat an earlier candidate are
// dropped; at most `max_candidates` samples are returned.
std::vector<AugmentedSample> rewrite_synonym(const corpus::LabeledPair& source,
                                             LlmProvider& llm,
                                             std::size_t max_candidates = 3,
                                             const RetryPolicy& retry = {});

// Antonym rewrites are labeled Irrelevant. Throws DataError("antonym
// rewriting requires relevant source") for an Irrelevant source.
std::vector<AugmentedSample> rewrite_antonym(const corpus::LabeledPair& source,
                                             LlmProvider& llm,
                                             std::size_t max_candidates = 1,
                                             const RetryPolicy& retry = {});

// Asks for three importance-ranked keywords and emits (rank 1, Strong) and
// (rank 3, Weak). A keyword whose token sequence does not occur in the
// document is discarded. Rank 2 is never emitted. Requires a Strong or Weak
// source (DataError otherwise).
std::vector<AugmentedSample> generate_queries(const corpus::LabeledPair& source,
                                              LlmProvider& llm,
                                              const RetryPolicy& retry = {});

// True if the normalized tokens of `keyword` form a contiguous run of the
// normalized tokens of `document`.
bool occurs_in(std::string_view keyword, std::string_view document);

struct AugmentConfig {
  bool synonyms = true;
  bool antonyms = true;
  bool generation = true;
  // Fraction of eligible sources each op is applied to; the choice is a hash
  // of (seed, source id, op), so it is reproducible.
  double synonym_rate = 0.25;
  double antonym_rate = 0.75;
  double generation_rate = 0.5;
  std::size_t max_synonyms = 3;
  std::size_t max_antonyms = 1;
  std::size_t generation_calls = 1;
  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0: one thread per in-flight slot
  std::size_t max_inflight = 4;
  double requests_per_second = 0;  // 0 disables rate limiting
  double max_failure_rate = 0.2;
  RetryPolicy retry;
};

struct AugmentFailure {
  std::string source_id;
  std::string op;
  std::string message;
};

struct AugmentReport {
  std::size_t calls = 0;
  std::vector<AugmentFailure> failures;

  double failure_rate() const {
    return calls == 0 ? 0.0
                      : static_cast<double>(failures.size()) /
                            static_cast<double>(calls);
  }
};

struct AugmentResult {
  std::vector<AugmentedSample> samples;
  AugmentReport report;
};

// Thrown when the share of failed provider calls exceeds max_failure_rate.
class AugmentAborted : public ProviderError {
 public:
  explicit AugmentAborted(const std::string& what)
      : ProviderError(what, false) {}
};

// Keeps the first sample for every (normalized query, source id) pair, and
// drops samples that repeat their source's own query.
std::vector<AugmentedSample> dedup(std::vector<AugmentedSample> samples,
                                   std::span<const corpus::LabeledPair> sources);

// Runs the enabled ops over every source with up to max_inflight concurrent
// provider calls. Samples come out grouped by source in input order, then
// synonym, antonym, keyword rank 1, keyword rank 3. Per-call failures are
// collected in the report; if their share exceeds max_failure_rate the run
// throws AugmentAborted. The input is not modified.
AugmentResult augment_dataset(std::span<const corpus::LabeledPair> dataset,
                              LlmProvider& llm, const AugmentConfig& config);

}  // namespace relevkit::augment

#endif  // RELEVKIT_AUGMENT_H_
