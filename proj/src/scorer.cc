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

#include "relevkit/scorer.h"

#include <algorithm>
#include <unordered_set>

#include "relevkit/batch.h"
#include "relevkit/metrics.h"
#include "relevkit/textseg.h"

namespace relevkit::scorer {

namespace {

using corpus::RelevanceLabel;

std::unordered_set<std::string> token_set(std::string_view text) {
  std::unordered_set<std::string> out;
  for (auto& t : textseg::tokenize(text)) out.insert(std::move(t.normalized));
  return out;
}

double coverage(const std::vector<std::string>& terms,
                std::string_view segment) {
  if (terms.empty() || segment.empty()) return 0.0;
  const auto present = token_set(segment);
  const auto hits = std::count_if(
      terms.begin(), terms.end(),
      [&](const std::string& t) { return present.contains(t); });
  return static_cast<double>(hits) / static_cast<double>(terms.size());
}

Prediction classify(const ScorerFeatures& f, const Thresholds& thresholds) {
  Prediction p;
  p.score = 0.5 * f.qf_coverage + 0.5 * f.doc_density;
  if (f.qf_coverage < thresholds.irrelevant_below) {
    p.label = RelevanceLabel::kIrrelevant;
  } else if (f.doc_density >= thresholds.strong_from) {
    p.label = RelevanceLabel::kStrong;
  } else {
    p.label = RelevanceLabel::kWeak;
  }
  return p;
}

std::size_t slot(RelevanceLabel label) { return static_cast<std::size_t>(label); }

}  // namespace

ScorerFeatures features(std::string_view query,
                        const summarizer::MixSummary& mix) {
  const auto terms = summarizer::query_terms(query);
  ScorerFeatures f;
  f.qf_coverage = coverage(terms, mix.query_focused);
  if (!terms.empty() && !mix.doc_summary_sentences.empty()) {
    std::size_t hits = 0;
    for (const auto& sentence : mix.doc_summary_sentences) {
      const auto present = token_set(sentence);
      if (std::any_of(terms.begin(), terms.end(), [&](const std::string& t) {
            return present.contains(t);
          })) {
        ++hits;
      }
    }
    f.doc_density = static_cast<double>(hits) /
                    static_cast<double>(mix.doc_summary_sentences.size());
  }
  return f;
}

Prediction score(std::string_view query, const summarizer::MixSummary& mix,
                 const Thresholds& thresholds) {
  return classify(features(query, mix), thresholds);
}

Prediction score_query_focused_only(std::string_view query,
                                    std::string_view qf_summary,
                                    const Thresholds& thresholds) {
  ScorerFeatures f;
  f.qf_coverage = coverage(summarizer::query_terms(query), qf_summary);
  f.doc_density = f.qf_coverage >= thresholds.irrelevant_below ? 1.0 : 0.0;
  return classify(f, thresholds);
}

std::vector<ScoredPair> score_pairs(
    std::span<const corpus::LabeledPair> pairs,
    std::span<const summarizer::MixSummary> summaries,
    const Thresholds& thresholds) {
  std::vector<ScoredPair> out(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i].mix = score(pairs[i].query, summaries[i], thresholds);
    out[i].qf_only = score_query_focused_only(
        pairs[i].query, summaries[i].query_focused, thresholds);
  }
  return out;
}

ExperimentReport evaluate_pairs(std::span<const corpus::LabeledPair> pairs,
                                std::span<const ScoredPair> scored) {
  ExperimentReport report;
  report.n = pairs.size();
  report.class_counts = corpus::stats(pairs);
  std::vector<metrics::ScoredPrediction> mix;
  std::vector<metrics::ScoredPrediction> qf;
  mix.reserve(pairs.size());
  qf.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto ref = pairs[i].label;
    mix.push_back({ref, scored[i].mix.score});
    qf.push_back({ref, scored[i].qf_only.score});
    ++report.confusion_mix[slot(ref)][slot(scored[i].mix.label)];
    ++report.confusion_qf_only[slot(ref)][slot(scored[i].qf_only.label)];
  }
  report.auc_mix = metrics::multiclass_auc(mix);
  report.auc_qf_only = metrics::multiclass_auc(qf);
  return report;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  auto matrix = [](const ConfusionMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (RelevanceLabel ref : corpus::kAllLabels) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (RelevanceLabel pred : corpus::kAllLabels) {
        row[std::string(corpus::label_name(pred))] = m[slot(ref)][slot(pred)];
      }
      rows[std::string(corpus::label_name(ref))] = row;
    }
    return rows;
  };
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["n"] = n;
  out["seed"] = seed;
  out["auc_mix"] = auc_mix;
  out["auc_qf_only"] = auc_qf_only;
  out["class_counts"] = class_counts.to_json();
  out["confusion_mix"] = matrix(confusion_mix);
  out["confusion_qf_only"] = matrix(confusion_qf_only);
  return out;
}

ExperimentReport run_experiment(const SyntheticSpec& spec,
                                const summarizer::SummaryBudget& budget,
                                const Thresholds& thresholds, int workers,
                                bool validate) {
  budget.validate();
  const auto corpus = synthesize_corpus(spec, validate);
  const auto summaries = summarizer::summarize_batch(corpus, budget, workers);
  const auto scored = score_pairs(corpus, summaries, thresholds);
  ExperimentReport report = evaluate_pairs(corpus, scored);
  report.seed = spec.seed;
  return report;
}

}  // namespace relevkit::scorer
