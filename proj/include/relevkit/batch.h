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

#ifndef RELEVKIT_BATCH_H_
#define RELEVKIT_BATCH_H_

#include <span>
#include <vector>

#include "relevkit/corpus.h"
#include "relevkit/summarizer.h"

namespace relevkit::summarizer {

// Summarizes every pair with OpenMP. Results are in input order and identical
// to summarize_batch_serial for any worker count; workers <= 0 uses the
// OpenMP default. The first failing pair (by position) rethrows its error.
std::vector<MixSummary> summarize_batch(std::span<const corpus::LabeledPair> pairs,
                                        const SummaryBudget& budget,
                                        int workers = 0);

// Single-threaded reference for summarize_batch.
std::vector<MixSummary> summarize_batch_serial(
    std::span<const corpus::LabeledPair> pairs, const SummaryBudget& budget);

}  // namespace relevkit::summarizer

#endif  // RELEVKIT_BATCH_H_
