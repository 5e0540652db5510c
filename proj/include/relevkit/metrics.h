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

#ifndef RELEVKIT_METRICS_H_
#define RELEVKIT_METRICS_H_

#include <cstdint>
#include <span>

#include "relevkit/corpus.h"

namespace relevkit::metrics {

struct ScoredPrediction {
  corpus::RelevanceLabel reference = corpus::RelevanceLabel::kIrrelevant;
  double predicted_score = 0.0;
};

struct GsbCounts {
  std::uint64_t good = 0;
  std::uint64_t same = 0;
  std::uint64_t bad = 0;
};

// 1 if a > b, otherwise 0. Ties give 0.
constexpr int indicator(double a, double b) { return a > b ? 1 : 0; }

// Pairwise multiclass AUC over reference scores {1, 0.7, 0}:
//
//   sum_{j,k} f(y_j, y_k) f(p_j, p_k) / sum_{j,k} f(y_j, y_k)
//
// Ties among predictions earn no credit. Throws DataError if any prediction
// is not finite, or if all references share one class ("AUC undefined: single
// reference class").
//
// Sort-based, O(n log n). Counting is split across `workers` OpenMP threads
// (<= 0 uses the OpenMP default); counts are integers, so the result does not
// depend on the thread count.
double multiclass_auc(std::span<const ScoredPrediction> predictions,
                      int workers = 0);

// Literal O(n^2) double loop over all ordered pairs. Test oracle.
double multiclass_auc_reference(std::span<const ScoredPrediction> predictions);

// (good - bad) / (good + same + bad). Throws DataError("no judgments") when
// every count is zero.
double delta_gsb(const GsbCounts& counts);

}  // namespace relevkit::metrics

#endif  // RELEVKIT_METRICS_H_
