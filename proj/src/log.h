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

#ifndef RELEVKIT_SRC_LOG_H_
#define RELEVKIT_SRC_LOG_H_

#include <memory>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace relevkit {

// Diagnostics go to stderr so stdout stays machine-readable.
inline std::shared_ptr<spdlog::logger> logger() {
  static const std::shared_ptr<spdlog::logger> kLogger = [] {
    auto existing = spdlog::get("relevkit");
    if (existing) return existing;
    auto made = spdlog::stderr_logger_mt("relevkit");
    made->set_pattern("relevkit: %l: %v");
    made->set_level(spdlog::level::warn);
    return made;
  }();
  return kLogger;
}

}  // namespace relevkit

#endif  // RELEVKIT_SRC_LOG_H_
