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

#include "relevkit/batch.h"

#include <omp.h>

#include <exception>

namespace relevkit::summarizer {

std::vector<MixSummary> summarize_batch(std::span<const corpus::LabeledPair> pairs,
                                        const SummaryBudget& budget,
                                        int workers) {
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  std::vector<MixSummary> out(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = mix_summary(pairs[i].query, pairs[i].document, budget);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return out;
}

std::vector<MixSummary> summarize_batch_serial(
    std::span<const corpus::LabeledPair> pairs, const SummaryBudget& budget) {
  std::vector<MixSummary> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    out.push_back(mix_summary(pair.query, pair.document, budget));
  }
  return out;
}

}  // namespace relevkit::summarizer
