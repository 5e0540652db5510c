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

#ifndef RELEVKIT_CONFIG_H_
#define RELEVKIT_CONFIG_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "relevkit/augment.h"
#include "relevkit/scorer.h"
#include "relevkit/summarizer.h"

namespace relevkit {

inline constexpr int kSchemaVersion = 1;

struct ProviderSettings {
  std::string kind = "mock";  // "mock" or "http"
  std::string model = "gpt-3.5-turbo";
  // Names of the environment variables holding the endpoint and API key; the
  // key itself never appears in a config file.
  std::string url_env = "RELEVKIT_LLM_URL";
  std::string key_env = "RELEVKIT_LLM_KEY";
  int timeout_seconds = 30;
};

struct PipelineConfig {
  summarizer::SummaryBudget budget;
  augment::AugmentConfig augment;
  ProviderSettings provider;
  scorer::Thresholds scorer;
  int workers = 1;
  std::string log_level = "warn";
};

// The --print-config document; load_config reads the same schema.
nlohmann::ordered_json to_json(const PipelineConfig& config);

// Overlays the keys present in `doc` onto `base`. Unknown keys and wrong
// types raise UsageError.
PipelineConfig apply_json(PipelineConfig base, const nlohmann::json& doc);

PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace relevkit

#endif  // RELEVKIT_CONFIG_H_
