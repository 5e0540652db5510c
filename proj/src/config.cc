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

#include "relevkit/config.h"

#include <fstream>
#include <initializer_list>
#include <string_view>

#include "relevkit/error.h"

namespace relevkit {

namespace {

using Json = nlohmann::json;

void check_keys(const Json& obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw UsageError("config: " + std::string(where) + " must be an object");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto key : allowed) ok = ok || it.key() == key;
    if (!ok) {
      throw UsageError("config: unknown key " + std::string(where) + "." +
                       it.key());
    }
  }
}

template <typename T>
void read(const Json& obj, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("config: bad value for ") + key);
  }
}

}  // namespace

nlohmann::ordered_json to_json(const PipelineConfig& c) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["schema_version"] = kSchemaVersion;

  auto& budget = out["budget"];
  budget["qf_max"] = c.budget.query_focused_max;
  budget["doc_max"] = c.budget.doc_summary_max;
  budget["total_max"] = c.budget.total_max;
  budget["separator"] = c.budget.separator;

  auto& aug = out["augment"];
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  if (c.augment.synonyms) ops.push_back("syn");
  if (c.augment.antonyms) ops.push_back("ant");
  if (c.augment.generation) ops.push_back("gen");
  aug["ops"] = ops;
  aug["synonym_rate"] = c.augment.synonym_rate;
  aug["antonym_rate"] = c.augment.antonym_rate;
  aug["generation_rate"] = c.augment.generation_rate;
  aug["max_synonyms"] = c.augment.max_synonyms;
  aug["max_antonyms"] = c.augment.max_antonyms;
  aug["generation_calls"] = c.augment.generation_calls;
  aug["seed"] = c.augment.seed;
  aug["max_inflight"] = c.augment.max_inflight;
  aug["requests_per_second"] = c.augment.requests_per_second;
  aug["max_failure_rate"] = c.augment.max_failure_rate;
  aug["retry"]["max_attempts"] = c.augment.retry.max_attempts;
  aug["retry"]["base_delay_ms"] = c.augment.retry.base_delay.count();
  aug["retry"]["factor"] = c.augment.retry.factor;

  auto& provider = out["provider"];
  provider["kind"] = c.provider.kind;
  provider["model"] = c.provider.model;
  provider["url_env"] = c.provider.url_env;
  provider["key_env"] = c.provider.key_env;
  provider["timeout_s"] = c.provider.timeout_seconds;

  out["scorer"]["theta_irr"] = c.scorer.irrelevant_below;
  out["scorer"]["theta_strong"] = c.scorer.strong_from;
  out["workers"] = c.workers;
  out["log_level"] = c.log_level;
  return out;
}

PipelineConfig apply_json(PipelineConfig c, const Json& doc) {
  check_keys(doc, "config",
             {"schema_version", "budget", "augment", "provider", "scorer",
              "workers", "log_level"});
  int schema = kSchemaVersion;
  read(doc, "schema_version", schema);
  if (schema != kSchemaVersion) {
    throw UsageError("config: unsupported schema_version " +
                     std::to_string(schema));
  }

  if (auto it = doc.find("budget"); it != doc.end()) {
    check_keys(*it, "budget", {"qf_max", "doc_max", "total_max", "separator"});
    read(*it, "qf_max", c.budget.query_focused_max);
    read(*it, "doc_max", c.budget.doc_summary_max);
    read(*it, "total_max", c.budget.total_max);
    read(*it, "separator", c.budget.separator);
  }

  if (auto it = doc.find("augment"); it != doc.end()) {
    check_keys(*it, "augment",
               {"ops", "synonym_rate", "antonym_rate", "generation_rate",
                "max_synonyms", "max_antonyms", "generation_calls", "seed",
                "max_inflight", "requests_per_second", "max_failure_rate",
                "retry"});
    auto& a = c.augment;
    if (auto ops = it->find("ops"); ops != it->end()) {
      std::vector<std::string> names;
      read(*it, "ops", names);
      a.synonyms = a.antonyms = a.generation = false;
      for (const auto& name : names) {
        if (name == "syn") {
          a.synonyms = true;
        } else if (name == "ant") {
          a.antonyms = true;
        } else if (name == "gen") {
          a.generation = true;
        } else {
          throw UsageError("config: unknown augment op " + name);
        }
      }
    }
    read(*it, "synonym_rate", a.synonym_rate);
    read(*it, "antonym_rate", a.antonym_rate);
    read(*it, "generation_rate", a.generation_rate);
    read(*it, "max_synonyms", a.max_synonyms);
    read(*it, "max_antonyms", a.max_antonyms);
    read(*it, "generation_calls", a.generation_calls);
    read(*it, "seed", a.seed);
    read(*it, "max_inflight", a.max_inflight);
    read(*it, "requests_per_second", a.requests_per_second);
    read(*it, "max_failure_rate", a.max_failure_rate);
    if (auto r = it->find("retry"); r != it->end()) {
      check_keys(*r, "augment.retry",
                 {"max_attempts", "base_delay_ms", "factor"});
      read(*r, "max_attempts", a.retry.max_attempts);
      std::int64_t delay = a.retry.base_delay.count();
      read(*r, "base_delay_ms", delay);
      a.retry.base_delay = std::chrono::milliseconds(delay);
      read(*r, "factor", a.retry.factor);
    }
  }

  if (auto it = doc.find("provider"); it != doc.end()) {
    check_keys(*it, "provider",
               {"kind", "model", "url_env", "key_env", "timeout_s"});
    read(*it, "kind", c.provider.kind);
    read(*it, "model", c.provider.model);
    read(*it, "url_env", c.provider.url_env);
    read(*it, "key_env", c.provider.key_env);
    read(*it, "timeout_s", c.provider.timeout_seconds);
    if (c.provider.kind != "mock" && c.provider.kind != "http") {
      throw UsageError("config: provider.kind must be mock or http");
    }
  }

  if (auto it = doc.find("scorer"); it != doc.end()) {
    check_keys(*it, "scorer", {"theta_irr", "theta_strong"});
    read(*it, "theta_irr", c.scorer.irrelevant_below);
    read(*it, "theta_strong", c.scorer.strong_from);
  }
  read(doc, "workers", c.workers);
  read(doc, "log_level", c.log_level);
  return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config " + path.string() + ": " + e.what());
  }
  return apply_json(PipelineConfig{}, doc);
}

}  // namespace relevkit
