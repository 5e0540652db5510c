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

#include "relevkit/metrics.h"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "relevkit/error.h"

namespace relevkit::metrics {

namespace {

using corpus::RelevanceLabel;

constexpr std::size_t class_slot(RelevanceLabel label) {
  return static_cast<std::size_t>(label);
}

// Number of (x, y) with x in `high`, y in `low_sorted` and x > y.
std::uint64_t count_concordant(const std::vector<double>& high,
                               const std::vector<double>& low_sorted,
                               int threads) {
  const auto n = static_cast<std::ptrdiff_t>(high.size());
  unsigned long long hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto it =
        std::lower_bound(low_sorted.begin(), low_sorted.end(), high[i]);
    hits += static_cast<unsigned long long>(it - low_sorted.begin());
  }
  return hits;
}

}  // namespace

double multiclass_auc(std::span<const ScoredPrediction> predictions,
                      int workers) {
  std::array<std::vector<double>, 3> by_class;
  for (const auto& p : predictions) {
    if (!std::isfinite(p.predicted_score)) {
      throw DataError("prediction score is not finite");
    }
    by_class[class_slot(p.reference)].push_back(p.predicted_score);
  }
  for (auto& scores : by_class) std::sort(scores.begin(), scores.end());

  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  for (RelevanceLabel hi : corpus::kAllLabels) {
    for (RelevanceLabel lo : corpus::kAllLabels) {
      if (corpus::score(hi) <= corpus::score(lo)) continue;
      const auto& high = by_class[class_slot(hi)];
      const auto& low = by_class[class_slot(lo)];
      denominator += static_cast<std::uint64_t>(high.size()) * low.size();
      if (!high.empty() && !low.empty()) {
        numerator += count_concordant(high, low, threads);
      }
    }
  }
  if (denominator == 0) {
    throw DataError("AUC undefined: single reference class");
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double delta_gsb(const GsbCounts& counts) {
  const std::uint64_t total = counts.good + counts.same + counts.bad;
  if (total == 0) throw DataError("no judgments");
  return (static_cast<double>(counts.good) - static_cast<double>(counts.bad)) /
         static_cast<double>(total);
}

}  // namespace relevkit::metrics
