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
#include <gtest/gtest.h>

#include <thread>

#include "json.hpp"
#include "relevkit/error.h"
#include "relevkit/prompts.h"
#include "relevkit/providers.h"

namespace relevkit::augment {
namespace {

std::size_t count(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(PromptTest, RenderHasEveryPartAndTargetOnce) {
  for (auto task : {PromptTask::kSynonym, PromptTask::kAntonym,
                    PromptTask::kKeywords}) {
    const auto& t = prompt_template(task);
    const std::string target = "zq target 42";
    const std::string prompt = t.render(target);
    EXPECT_EQ(count(prompt, target), 1u);
    EXPECT_NE(prompt.find(t.role_instruction), std::string::npos);
    EXPECT_NE(prompt.find(t.constraints), std::string::npos);
    EXPECT_NE(prompt.find(t.output_format_instruction), std::string::npos);
    ASSERT_FALSE(t.few_shot_examples.empty());
    for (const auto& [in, out] : t.few_shot_examples) {
      EXPECT_NE(prompt.find("Input: " + in), std::string::npos);
      EXPECT_NE(prompt.find(out), std::string::npos);
    }
    EXPECT_EQ(detect_task(prompt), task);
    EXPECT_EQ(extract_target(prompt), target);
  }
  EXPECT_FALSE(detect_task("Tell me a story").has_value());
  EXPECT_FALSE(extract_target("no shape").has_value());
}

TEST(PromptTest, MultiLineTargetRoundTrips) {
  const std::string doc = "Line one.\n\nInput: tricky\nOutput: here.";
  const auto prompt = prompt_template(PromptTask::kKeywords).render(doc);
  EXPECT_EQ(extract_target(prompt), doc);
}

TEST(ParseTest, Candidates) {
  EXPECT_EQ(parse_candidates("  a b \n\n- c\n* d\n1. e\n2) f\r\n"),
            (std::vector<std::string>{"a b", "c", "d", "e", "f"}));
  EXPECT_TRUE(parse_candidates("").empty());
  EXPECT_THROW(parse_candidates("\xc3("), CompletionParseError);
}

TEST(ParseTest, Keywords) {
  const auto kw = parse_keywords("\n mini hot pot > pot base>spicy \nextra");
  EXPECT_EQ(kw[0], "mini hot pot");
  EXPECT_EQ(kw[1], "pot base");
  EXPECT_EQ(kw[2], "spicy");
  EXPECT_THROW(parse_keywords(""), CompletionParseError);
  EXPECT_THROW(parse_keywords("a>b"), CompletionParseError);
}

// Local chat-completions endpoint whose behaviour each test sets.
class HttpProviderTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   last_body_ = req.body;
                   last_auth_ = req.get_header_value("Authorization");
                   res.status = status_;
                   res.set_content(reply_, "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  std::unique_ptr<LlmProvider> provider() {
    HttpProviderConfig c;
    c.url = "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
    c.api_key = "k-123";
    c.timeout = std::chrono::seconds(5);
    return http_provider(c);
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  int status_ = 200;
  std::string reply_;
  std::string last_body_;
  std::string last_auth_;
};

TEST_F(HttpProviderTest, Success) {
  reply_ = R"({"choices":[{"message":{"role":"assistant","content":"hot pot"}}]})";
  auto llm = provider();
  EXPECT_EQ(llm->complete("the prompt"), "hot pot");
  EXPECT_EQ(llm->provider_name(), "http");
  EXPECT_EQ(llm->model_name(), "gpt-3.5-turbo");
  EXPECT_EQ(last_auth_, "Bearer k-123");
  const auto body = nlohmann::json::parse(last_body_);
  EXPECT_EQ(body["model"], "gpt-3.5-turbo");
  ASSERT_EQ(body["messages"].size(), 2u);
  EXPECT_EQ(body["messages"][0]["role"], "system");
  EXPECT_EQ(body["messages"][1]["role"], "user");
  EXPECT_EQ(body["messages"][1]["content"], "the prompt");
}

TEST_F(HttpProviderTest, ServerErrorIsRetryable) {
  status_ = 503;
  reply_ = "{}";
  auto llm = provider();
  try {
    llm->complete("p");
    FAIL();
  } catch (const TransportError& e) {
    EXPECT_TRUE(e.retryable());
  }
  status_ = 429;
  EXPECT_THROW(llm->complete("p"), TransportError);
}

TEST_F(HttpProviderTest, ClientErrorIsNotRetryable) {
  status_ = 400;
  reply_ = R"({"error":"bad"})";
  auto llm = provider();
  try {
    llm->complete("p");
    FAIL();
  } catch (const TransportError&) {
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_FALSE(e.retryable());
  }
}

TEST_F(HttpProviderTest, MalformedBodyCarriesRaw) {
  reply_ = R"({"choices":[]})";
  auto llm = provider();
  try {
    llm->complete("p");
    FAIL();
  } catch (const CompletionParseError& e) {
    EXPECT_EQ(e.raw_completion(), reply_);
  }
}

TEST(HttpProviderConnectTest, UnreachableIsTransportError) {
  HttpProviderConfig c;
  c.url = "http://127.0.0.1:1/v1/chat/completions";
  c.timeout = std::chrono::seconds(2);
  EXPECT_THROW(http_provider(c)->complete("p"), TransportError);
  c.url = "not a url";
  EXPECT_THROW(http_provider(c), ProviderError);
}

TEST(RateLimiterTest, DisabledNeverBlocks) {
  RateLimiter off(0, 1);
  for (int i = 0; i < 1000; ++i) off.acquire();
  RateLimiter fast(1000, 5);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 25; ++i) fast.acquire();
  const auto elapsed = std::chrono::steady_clock::now() - start;
  // 20 tokens beyond the burst at 1000/s take about 20 ms.
  EXPECT_GE(elapsed, std::chrono::milliseconds(15));
}

TEST(HashTest, StableValues) {
  EXPECT_EQ(stable_hash("abc"), stable_hash("abc"));
  EXPECT_NE(stable_hash("abc"), stable_hash("abd"));
  EXPECT_NE(stable_hash("abc", 1), stable_hash("abc", 2));
}

}  // namespace
}  // namespace relevkit::augment
