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

#include "relevkit/llm_provider.h"

#include <algorithm>
#include <thread>


#include "log.h"
#include "relevkit/error.h"

namespace relevkit::augment {

std::string complete_with_retry(LlmProvider& llm, const std::string& prompt,
                                const RetryPolicy& policy) {
  auto delay = policy.base_delay;
  const int attempts = std::max(1, policy.max_attempts);
  for (int attempt = 1;; ++attempt) {
    try {
      return llm.complete(prompt);
    } catch (const TransportError& e) {
      if (attempt >= attempts) throw;
      logger()->warn("{} call failed (attempt {}/{}): {}", llm.provider_name(),
                   attempt, attempts, e.what());
      if (policy.sleep) {
        policy.sleep(delay);
      } else {
        std::this_thread::sleep_for(delay);
      }
      delay = std::chrono::milliseconds(static_cast<std::int64_t>(
          static_cast<double>(delay.count()) * policy.factor));
    }
  }
}

RateLimiter::RateLimiter(double per_second, double burst)
    : rate_(per_second),
      capacity_(std::max(1.0, burst)),
      tokens_(capacity_),
      last_(Clock::now()) {}

void RateLimiter::acquire() {
  if (rate_ <= 0) return;
  std::unique_lock lock(mu_);
  for (;;) {
    const auto now = Clock::now();
    const std::chrono::duration<double> elapsed = now - last_;
    last_ = now;
    tokens_ = std::min(capacity_, tokens_ + elapsed.count() * rate_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const auto wait = std::chrono::duration<double>((1.0 - tokens_) / rate_);
    // Holding the lock keeps waiters in FIFO-ish order.
    std::this_thread::sleep_for(wait);
  }
}

std::uint64_t stable_hash(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // murmur3 fmix64: FNV alone leaves the high bits of short keys correlated.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace relevkit::augment
