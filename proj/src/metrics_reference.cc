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

// Serial O(n^2) multiclass AUC, kept as the oracle for the sort-based path.

#include <cmath>

#include "relevkit/error.h"
#include "relevkit/metrics.h"

namespace relevkit::metrics {

double multiclass_auc_reference(std::span<const ScoredPrediction> predictions) {
  for (const auto& p : predictions) {
    if (!std::isfinite(p.predicted_score)) {
      throw DataError("prediction score is not finite");
    }
  }
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  for (const auto& j : predictions) {
    const double yj = corpus::score(j.reference);
    for (const auto& k : predictions) {
      const int fy = indicator(yj, corpus::score(k.reference));
      denominator += fy;
      numerator += fy * indicator(j.predicted_score, k.predicted_score);
    }
  }
  if (denominator == 0) {
    throw DataError("AUC undefined: single reference class");
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace relevkit::metrics
