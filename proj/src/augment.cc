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

#include "relevkit/augment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <semaphore>
#include <thread>
#include <unordered_set>

#include "relevkit/prompts.h"
#include "relevkit/textseg.h"
#include "relevkit/utf8.h"

namespace relevkit::augment {

namespace {

using corpus::LabeledPair;
using corpus::RelevanceLabel;

std::vector<std::string> normalized_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : textseg::tokenize(text)) out.push_back(std::move(t.normalized));
  return out;
}

bool is_relevant(RelevanceLabel label) {
  return label == RelevanceLabel::kStrong || label == RelevanceLabel::kWeak;
}

AugmentedSample make_sample(const LabeledPair& source, std::string query,
                            RelevanceLabel label, Provenance provenance,
                            std::string_view id_suffix) {
  AugmentedSample sample;
  sample.pair.id = source.id + "#" + std::string(id_suffix);
  sample.pair.query = std::move(query);
  sample.pair.document = source.document;
  sample.pair.label = label;
  sample.provenance = provenance;
  sample.source_id = source.id;
  return sample;
}

// Shared by both rewrite ops.
std::vector<AugmentedSample> rewrite(const LabeledPair& source,
                                     LlmProvider& llm, PromptTask task,
                                     std::size_t max_candidates,
                                     const RetryPolicy& retry) {
  const bool synonym = task == PromptTask::kSynonym;
  const std::string prompt = prompt_template(task).render(source.query);
  const auto candidates =
      parse_candidates(complete_with_retry(llm, prompt, retry));

  const std::string source_fold = utf8::case_fold(utf8::trim(source.query));
  const std::string source_norm = normalized_query(source.query);
  std::unordered_set<std::string> seen;
  std::vector<AugmentedSample> out;
  for (const std::string& candidate : candidates) {
    if (out.size() >= max_candidates) break;
    const std::string norm = normalized_query(candidate);
    if (norm.empty()) continue;
    if (utf8::case_fold(candidate) == source_fold || norm == source_norm) {
      continue;
    }
    if (!seen.insert(norm).second) continue;
    const auto label = synonym ? source.label : RelevanceLabel::kIrrelevant;
    const auto kind = synonym ? ProvenanceKind::kSynonymRewrite
                              : ProvenanceKind::kAntonymRewrite;
    const std::string suffix =
        (synonym ? "syn" : "ant") + std::to_string(out.size() + 1);
    out.push_back(make_sample(source, candidate, label, {kind, 0}, suffix));
  }
  return out;
}

bool sampled(std::uint64_t seed, std::string_view source_id,
             std::string_view op, double rate) {
  if (rate >= 1.0) return true;
  if (rate <= 0.0) return false;
  std::string key(op);
  key += '\x1f';
  key += source_id;
  const std::uint64_t h = stable_hash(key, stable_hash(std::to_string(seed)));
  const double unit = static_cast<double>(h >> 11) * 0x1.0p-53;
  return unit < rate;
}

}  // namespace

std::string Provenance::to_string() const {
  switch (kind) {
    case ProvenanceKind::kSynonymRewrite:
      return "synonym_rewrite";
    case ProvenanceKind::kAntonymRewrite:
      return "antonym_rewrite";
    case ProvenanceKind::kKeywordGeneration:
      return "keyword_generation:" + std::to_string(rank);
  }
  return {};
}

nlohmann::ordered_json sample_to_json(const AugmentedSample& sample) {
  auto out = corpus::record_to_json(sample.pair);
  out["provenance"] = sample.provenance.to_string();
  out["source_id"] = sample.source_id;
  return out;
}

std::string normalized_query(std::string_view query) {
  std::string out;
  for (const auto& w : normalized_tokens(query)) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool occurs_in(std::string_view keyword, std::string_view document) {
  const auto needle = normalized_tokens(keyword);
  if (needle.empty()) return false;
  const auto hay = normalized_tokens(document);
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

std::vector<AugmentedSample> rewrite_synonym(const LabeledPair& source,
                                             LlmProvider& llm,
                                             std::size_t max_candidates,
                                             const RetryPolicy& retry) {
  return rewrite(source, llm, PromptTask::kSynonym, max_candidates, retry);
}

std::vector<AugmentedSample> rewrite_antonym(const LabeledPair& source,
                                             LlmProvider& llm,
                                             std::size_t max_candidates,
                                             const RetryPolicy& retry) {
  if (!is_relevant(source.label)) {
    throw DataError("antonym rewriting requires relevant source");
  }
  return rewrite(source, llm, PromptTask::kAntonym, max_candidates, retry);
}

std::vector<AugmentedSample> generate_queries(const LabeledPair& source,
                                              LlmProvider& llm,
                                              const RetryPolicy& retry) {
  if (!is_relevant(source.label)) {
    throw DataError("query generation requires relevant source");
  }
  const std::string prompt =
      prompt_template(PromptTask::kKeywords).render(source.document);
  const auto keywords = parse_keywords(complete_with_retry(llm, prompt, retry));

  std::vector<AugmentedSample> out;
  if (occurs_in(keywords[0], source.document)) {
    out.push_back(make_sample(source, keywords[0], RelevanceLabel::kStrong,
                              {ProvenanceKind::kKeywordGeneration, 1}, "gen1"));
  }
  if (occurs_in(keywords[2], source.document)) {
    out.push_back(make_sample(source, keywords[2], RelevanceLabel::kWeak,
                              {ProvenanceKind::kKeywordGeneration, 3}, "gen3"));
  }
  return out;
}

std::vector<AugmentedSample> dedup(std::vector<AugmentedSample> samples,
                                   std::span<const LabeledPair> sources) {
  std::unordered_set<std::string> seen;
  auto key = [](std::string_view query, std::string_view id) {
    std::string k = normalized_query(query);
    k += '\x1f';
    k += id;
    return k;
  };
  for (const auto& s : sources) seen.insert(key(s.query, s.id));
  std::vector<AugmentedSample> out;
  out.reserve(samples.size());
  for (auto& sample : samples) {
    if (seen.insert(key(sample.pair.query, sample.source_id)).second) {
      out.push_back(std::move(sample));
    }
  }
  return out;
}

AugmentResult augment_dataset(std::span<const LabeledPair> dataset,
                              LlmProvider& llm, const AugmentConfig& config) {
  struct Slot {
    std::vector<AugmentedSample> samples;
    std::vector<AugmentFailure> failures;
    std::size_t calls = 0;
  };
  std::vector<Slot> slots(dataset.size());

  const std::size_t inflight = std::max<std::size_t>(1, config.max_inflight);
  const std::size_t threads = std::min<std::size_t>(
      std::max<std::size_t>(1, config.workers > 0 ? config.workers : inflight),
      std::max<std::size_t>(1, dataset.size()));
  std::counting_semaphore<> gate(static_cast<std::ptrdiff_t>(inflight));
  RateLimiter limiter(config.requests_per_second,
                      std::max(1.0, config.requests_per_second));

  auto guarded = [&](Slot& slot, const LabeledPair& source, const char* op,
                     auto&& call) {
    ++slot.calls;
    limiter.acquire();
    gate.acquire();
    try {
      auto produced = call();
      gate.release();
      for (auto& s : produced) slot.samples.push_back(std::move(s));
    } catch (const std::exception& e) {
      gate.release();
      slot.failures.push_back({source.id, op, e.what()});
    }
  };

  auto process = [&](std::size_t index) {
    const LabeledPair& source = dataset[index];
    Slot& slot = slots[index];
    const bool relevant = is_relevant(source.label);
    if (config.synonyms &&
        sampled(config.seed, source.id, "syn", config.synonym_rate)) {
      guarded(slot, source, "syn", [&] {
        return rewrite_synonym(source, llm, config.max_synonyms, config.retry);
      });
    }
    if (config.antonyms && relevant &&
        sampled(config.seed, source.id, "ant", config.antonym_rate)) {
      guarded(slot, source, "ant", [&] {
        return rewrite_antonym(source, llm, config.max_antonyms, config.retry);
      });
    }
    if (config.generation && relevant &&
        sampled(config.seed, source.id, "gen", config.generation_rate)) {
      for (std::size_t call = 0; call < config.generation_calls; ++call) {
        guarded(slot, source, "gen", [&] {
          return generate_queries(source, llm, config.retry);
        });
      }
    }
  };

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < dataset.size(); i = next++) {
          process(i);
        }
      });
    }
  }

  AugmentResult result;
  std::vector<AugmentedSample> all;
  for (auto& slot : slots) {
    result.report.calls += slot.calls;
    for (auto& f : slot.failures) result.report.failures.push_back(std::move(f));
    for (auto& s : slot.samples) all.push_back(std::move(s));
  }
  result.samples = dedup(std::move(all), dataset);

  if (result.report.failure_rate() > config.max_failure_rate) {
    const auto& first = result.report.failures.front();
    throw AugmentAborted(
        std::to_string(result.report.failures.size()) + " of " +
        std::to_string(result.report.calls) +
        " provider calls failed, above the allowed rate; first failure (" +
        first.source_id + ", " + first.op + "): " + first.message);
  }
  return result;
}

}  // namespace relevkit::augment
