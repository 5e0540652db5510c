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

#ifndef RELEVKIT_PROVIDERS_H_
#define RELEVKIT_PROVIDERS_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>

#include "relevkit/llm_provider.h"

namespace relevkit::augment {

// Deterministic stand-in for an LLM that understands the built-in prompt
// templates. Completions depend only on (seed, prompt):
//   synonyms: 1-3 lines, each the query with one token swapped for a lexicon
//             synonym or a generated pseudo-synonym, or its tokens rotated;
//             never the query itself.
//   antonyms: the query with one token replaced by a lexicon antonym, or
//             prefixed with the negation marker "not".
//   keywords: the document's three most frequent non-stopword tokens,
//             ties broken by first occurrence, joined with '>'.
// Unknown prompts raise a non-retryable ProviderError.
std::unique_ptr<LlmProvider> mock_provider(std::uint64_t seed);

struct HttpProviderConfig {
  std::string url;  // full endpoint, e.g. https://host/v1/chat/completions
  std::string api_key;
  std::string model = "gpt-3.5-turbo";
  std::string system_message =
      "You produce training data for a search relevance model. Follow the "
      "requested output format exactly.";
  std::chrono::seconds timeout{30};
};

// Chat-completions client: POSTs {"model", "messages": [system, user]} and
// returns choices[0].message.content. Connection failures, timeouts, 429 and
// 5xx raise TransportError; other HTTP errors and malformed bodies raise
// ProviderError / CompletionParseError.
std::unique_ptr<LlmProvider> http_provider(HttpProviderConfig config);

}  // namespace relevkit::augment

#endif  // RELEVKIT_PROVIDERS_H_
