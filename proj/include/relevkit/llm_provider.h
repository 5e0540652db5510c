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

#ifndef RELEVKIT_LLM_PROVIDER_H_
#define RELEVKIT_LLM_PROVIDER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace relevkit::augment {

// A text-completion backend. Implementations must be safe to call from
// several threads at once. complete() either returns the model's text or
// throws ProviderError; it never returns a made-up answer on failure.
class LlmProvider {
 public:
  virtual ~LlmProvider() = default;

  virtual std::string complete(const std::string& prompt) = 0;

  virtual std::string provider_name() const = 0;
  virtual std::string model_name() const = 0;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{1000};
  double factor = 2.0;
  // Injected so tests do not sleep.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Calls llm.complete, retrying TransportError with exponential backoff
// (base_delay, base_delay * factor, ...). Other errors propagate at once.
std::string complete_with_retry(LlmProvider& llm, const std::string& prompt,
                                const RetryPolicy& policy);

// Token bucket shared by worker threads. A rate <= 0 disables limiting.
class RateLimiter {
 public:
  RateLimiter(double per_second, double burst);

  // Blocks until a token is available.
  void acquire();

 private:
  using Clock = std::chrono::steady_clock;

  double rate_;
  double capacity_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mu_;
};

// 64-bit FNV-1a with a murmur3 finalizer; stable across platforms, unlike
// std::hash.
std::uint64_t stable_hash(std::string_view data,
                          std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace relevkit::augment

#endif  // RELEVKIT_LLM_PROVIDER_H_
