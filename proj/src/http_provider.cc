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

#include <httplib.h>

#include "json.hpp"
#include "relevkit/error.h"
#include "relevkit/providers.h"

namespace relevkit::augment {

namespace {

// Splits "scheme://host[:port]/path" into the client origin and the path.
std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ProviderError("LLM endpoint must be an absolute URL: " + url, false);
  }
  const auto path_begin = url.find('/', scheme_end + 3);
  if (path_begin == std::string::npos) return {url, "/"};
  return {url.substr(0, path_begin), url.substr(path_begin)};
}

class HttpProvider : public LlmProvider {
 public:
  explicit HttpProvider(HttpProviderConfig config)
      : config_(std::move(config)) {
    std::tie(origin_, path_) = split_url(config_.url);
  }

  std::string complete(const std::string& prompt) override {
    nlohmann::json body = {
        {"model", config_.model},
        {"messages",
         {{{"role", "system"}, {"content", config_.system_message}},
          {{"role", "user"}, {"content", prompt}}}},
    };

    // httplib clients are not thread-safe; one per call.
    httplib::Client client(origin_);
    const auto timeout = config_.timeout;
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (!config_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + config_.api_key);
    }

    auto res = client.Post(path_, headers, body.dump(), "application/json");
    if (!res) {
      throw TransportError("request to " + config_.url +
                           " failed: " + httplib::to_string(res.error()));
    }
    if (res->status == 429 || res->status >= 500) {
      throw TransportError("LLM endpoint returned HTTP " +
                           std::to_string(res->status));
    }
    if (res->status < 200 || res->status >= 300) {
      throw ProviderError("LLM endpoint returned HTTP " +
                              std::to_string(res->status) + ": " + res->body,
                          false);
    }

    try {
      const auto reply = nlohmann::json::parse(res->body);
      return reply.at("choices").at(0).at("message").at("content")
          .get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw CompletionParseError(
          std::string("unexpected chat completion body: ") + e.what(),
          res->body);
    }
  }

  std::string provider_name() const override { return "http"; }
  std::string model_name() const override { return config_.model; }

 private:
  HttpProviderConfig config_;
  std::string origin_;
  std::string path_;
};

}  // namespace

std::unique_ptr<LlmProvider> http_provider(HttpProviderConfig config) {
  return std::make_unique<HttpProvider>(std::move(config));
}

}  // namespace relevkit::augment
