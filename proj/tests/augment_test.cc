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

#include "relevkit/augment.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "relevkit/prompts.h"
#include "relevkit/providers.h"
#include "relevkit/textseg.h"
#include "test_util.h"

namespace relevkit::augment {
namespace {

using corpus::LabeledPair;
using corpus::RelevanceLabel;

constexpr const char* kHotPotDoc =
    "My favourite beef hot pot place. The pot base costs only 10 yuan and the "
    "broth is rich and spicy, very satisfying! Overall the mini hot pot is "
    "great.";

const LabeledPair kBeef{"b1", "Beef hot pot", kHotPotDoc,
                        RelevanceLabel::kStrong, {}};

// Returns a fixed completion per prompt task and counts calls.
class ScriptedProvider : public LlmProvider {
 public:
  std::map<PromptTask, std::string> replies;
  std::atomic<int> calls{0};

  std::string complete(const std::string& prompt) override {
    ++calls;
    auto task = detect_task(prompt);
    if (!task || !replies.contains(*task)) {
      throw ProviderError("no scripted reply", false);
    }
    return replies.at(*task);
  }
  std::string provider_name() const override { return "scripted"; }
  std::string model_name() const override { return "none"; }
};

// Fails with a transport error the first `failures` times.
class FlakyProvider : public LlmProvider {
 public:
  explicit FlakyProvider(int failures) : failures_(failures) {}
  std::atomic<int> calls{0};

  std::string complete(const std::string&) override {
    if (calls++ < failures_) throw TransportError("connection reset");
    return "hot pot";
  }
  std::string provider_name() const override { return "flaky"; }
  std::string model_name() const override { return "none"; }

 private:
  int failures_;
};

RetryPolicy no_sleep(std::vector<std::chrono::milliseconds>* delays = nullptr) {
  RetryPolicy p;
  p.sleep = [delays](std::chrono::milliseconds d) {
    if (delays) delays->push_back(d);
  };
  return p;
}

std::vector<std::string> queries(const std::vector<AugmentedSample>& samples) {
  std::vector<std::string> out;
  for (const auto& s : samples) out.push_back(s.pair.query);
  return out;
}

TEST(SynonymTest, HotPotExample) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kSynonym] = "hot pot";
  const auto out = rewrite_synonym(kBeef, llm);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].pair.query, "hot pot");
  EXPECT_EQ(out[0].pair.document, kHotPotDoc);
  EXPECT_EQ(out[0].pair.label, RelevanceLabel::kStrong);
  EXPECT_EQ(out[0].pair.id, "b1#syn1");
  EXPECT_EQ(out[0].source_id, "b1");
  EXPECT_EQ(out[0].provenance.to_string(), "synonym_rewrite");
}

TEST(SynonymTest, RejectsIdentityEmptyAndDuplicates) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kSynonym] =
      "Beef hot pot\nbeef HOT pot\n\n- hot pot\nhot pot\n  \nHot Pot\nbeef-hot-pot\n"
      "spicy beef pot";
  const auto out = rewrite_synonym(kBeef, llm);
  EXPECT_EQ(queries(out), (std::vector<std::string>{"hot pot", "spicy beef pot"}));
  EXPECT_EQ(out[1].pair.id, "b1#syn2");
}

TEST(SynonymTest, CapsCandidates) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kSynonym] = "a1\na2\na3\na4";
  EXPECT_EQ(rewrite_synonym(kBeef, llm).size(), 3u);
  EXPECT_EQ(rewrite_synonym(kBeef, llm, 2).size(), 2u);
}

TEST(SynonymTest, AnyLabelKeepsLabel) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kSynonym] = "other words";
  for (auto label : corpus::kAllLabels) {
    LabeledPair src = kBeef;
    src.label = label;
    const auto out = rewrite_synonym(src, llm);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].pair.label, label);
  }
}

TEST(SynonymTest, UnparseableCompletionCarriesRaw) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kSynonym] = std::string(300, 'x');
  try {
    rewrite_synonym(kBeef, llm);
    FAIL();
  } catch (const CompletionParseError& e) {
    EXPECT_EQ(e.raw_completion(), std::string(300, 'x'));
    EXPECT_FALSE(e.retryable());
  }
}

TEST(AntonymTest, BeefSnacksExample) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kAntonym] = "beef snacks";
  const auto out = rewrite_antonym(kBeef, llm);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].pair.query, "beef snacks");
  EXPECT_EQ(out[0].pair.document, kHotPotDoc);
  EXPECT_EQ(out[0].pair.label, RelevanceLabel::kIrrelevant);
  EXPECT_EQ(out[0].pair.id, "b1#ant1");
  EXPECT_EQ(out[0].provenance.to_string(), "antonym_rewrite");
}

TEST(AntonymTest, IrrelevantSourceIsRejected) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kAntonym] = "beef snacks";
  LabeledPair src = kBeef;
  src.label = RelevanceLabel::kIrrelevant;
  try {
    rewrite_antonym(src, llm);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_STREQ(e.what(), "antonym rewriting requires relevant source");
  }
  EXPECT_EQ(llm.calls, 0);
}

TEST(AntonymTest, EmptyCompletionGivesNothing) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kAntonym] = "\n  \n";
  EXPECT_TRUE(rewrite_antonym(kBeef, llm).empty());
}

TEST(GenerateTest, HotPotKeywords) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kKeywords] = "mini hot pot>pot base>spicy";
  const auto out = generate_queries(kBeef, llm);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].pair.query, "mini hot pot");
  EXPECT_EQ(out[0].pair.label, RelevanceLabel::kStrong);
  EXPECT_EQ(out[0].provenance.to_string(), "keyword_generation:1");
  EXPECT_EQ(out[0].pair.id, "b1#gen1");
  EXPECT_EQ(out[1].pair.query, "spicy");
  EXPECT_EQ(out[1].pair.label, RelevanceLabel::kWeak);
  EXPECT_EQ(out[1].provenance.to_string(), "keyword_generation:3");
  EXPECT_EQ(out[1].pair.id, "b1#gen3");
}

TEST(GenerateTest, ArityError) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kKeywords] = "a>b";
  try {
    generate_queries(kBeef, llm);
    FAIL();
  } catch (const CompletionParseError& e) {
    EXPECT_EQ(e.raw_completion(), "a>b");
  }
  llm.replies[PromptTask::kKeywords] = "a>b>c>d";
  EXPECT_THROW(generate_queries(kBeef, llm), CompletionParseError);
  llm.replies[PromptTask::kKeywords] = "a>>c";
  EXPECT_THROW(generate_queries(kBeef, llm), CompletionParseError);
}

TEST(GenerateTest, AbsentRankThreeKeywordIsDropped) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kKeywords] = "mini hot pot>pot base>sushi";
  const auto out = generate_queries(kBeef, llm);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].pair.label, RelevanceLabel::kStrong);
}

TEST(GenerateTest, RequiresRelevantSource) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kKeywords] = "a>b>c";
  LabeledPair src = kBeef;
  src.label = RelevanceLabel::kIrrelevant;
  EXPECT_THROW(generate_queries(src, llm), DataError);
}

TEST(OccursInTest, TokenSubsequence) {
  EXPECT_TRUE(occurs_in("Mini Hot-Pot", kHotPotDoc));
  EXPECT_TRUE(occurs_in("spicy", kHotPotDoc));
  EXPECT_FALSE(occurs_in("pot hot", kHotPotDoc));
  EXPECT_FALSE(occurs_in("spic", kHotPotDoc));
  EXPECT_FALSE(occurs_in("", kHotPotDoc));
  EXPECT_TRUE(occurs_in("公园", "樱花在公园里"));
}

// Oracle for the mock keyword completion: frequency count over normalized
// tokens, ties by first occurrence.
std::vector<std::string> top_tokens(const std::string& doc,
                                    const std::set<std::string>& skip) {
  std::vector<std::string> order;
  std::map<std::string, int> freq;
  for (const auto& t : textseg::tokenize(doc)) {
    if (skip.contains(t.normalized)) continue;
    if (freq[t.normalized]++ == 0) order.push_back(t.normalized);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& a, const auto& b) { return freq[a] > freq[b]; });
  order.resize(std::min<std::size_t>(3, order.size()));
  return order;
}

TEST(MockProviderTest, KeywordsFollowFrequency) {
  auto llm = mock_provider(0);
  const std::string doc =
      "pot pot pot broth broth chili. The pot is hot, chili broth and pot.";
  const auto reply =
      llm->complete(prompt_template(PromptTask::kKeywords).render(doc));
  const auto kw = parse_keywords(reply);
  EXPECT_EQ(kw[0], "pot");
  const auto expected = top_tokens(doc, {"the", "is", "and"});
  EXPECT_EQ(std::vector<std::string>(kw.begin(), kw.end()), expected);
}

TEST(MockProviderTest, DeterministicAndNeverIdentity) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::string q = testing::random_query(rng);
    const std::uint64_t seed = rng() % 4;
    auto a = mock_provider(seed);
    auto b = mock_provider(seed);
    for (auto task : {PromptTask::kSynonym, PromptTask::kAntonym}) {
      const std::string prompt = prompt_template(task).render(q);
      const std::string reply = a->complete(prompt);
      ASSERT_EQ(reply, b->complete(prompt));
      for (const auto& line : parse_candidates(reply)) {
        ASSERT_NE(normalized_query(line), normalized_query(q)) << q;
      }
    }
  }
}

TEST(MockProviderTest, UnknownPromptFails) {
  auto llm = mock_provider(0);
  try {
    llm->complete("hello");
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_FALSE(e.retryable());
  }
}

TEST(RetryTest, BackoffThenSuccess) {
  FlakyProvider llm(2);
  std::vector<std::chrono::milliseconds> delays;
  EXPECT_EQ(complete_with_retry(llm, "p", no_sleep(&delays)), "hot pot");
  EXPECT_EQ(llm.calls, 3);
  EXPECT_EQ(delays, (std::vector<std::chrono::milliseconds>{
                        std::chrono::milliseconds(1000),
                        std::chrono::milliseconds(2000)}));
}

TEST(RetryTest, GivesUpAfterMaxAttempts) {
  FlakyProvider llm(5);
  EXPECT_THROW(complete_with_retry(llm, "p", no_sleep()), TransportError);
  EXPECT_EQ(llm.calls, 3);
}

TEST(RetryTest, ParseErrorsAreNotRetried) {
  ScriptedProvider llm;
  llm.replies[PromptTask::kKeywords] = "a>b";
  EXPECT_THROW(generate_queries(kBeef, llm, no_sleep()), CompletionParseError);
  EXPECT_EQ(llm.calls, 1);
}

std::vector<LabeledPair> random_sources(std::mt19937_64& rng, std::size_t n) {
  std::vector<LabeledPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"s" + std::to_string(i), testing::random_query(rng),
                   testing::random_document(rng), corpus::kAllLabels[rng() % 3],
                   {}});
  }
  return out;
}

AugmentConfig all_ops(std::uint64_t seed) {
  AugmentConfig c;
  c.synonym_rate = c.antonym_rate = c.generation_rate = 1.0;
  c.seed = seed;
  c.retry = no_sleep();
  return c;
}

TEST(AugmentDatasetTest, LabelInvariantsAndProvenance) {
  std::mt19937_64 rng(23);
  const auto sources = random_sources(rng, 300);
  const auto before = sources;
  auto llm = mock_provider(1);
  const auto result = augment_dataset(sources, *llm, all_ops(1));
  EXPECT_EQ(sources, before);
  std::map<std::string, const LabeledPair*> by_id;
  for (const auto& s : sources) by_id[s.id] = &s;
  EXPECT_FALSE(result.samples.empty());
  for (const auto& s : result.samples) {
    ASSERT_TRUE(by_id.contains(s.source_id));
    const LabeledPair& src = *by_id.at(s.source_id);
    ASSERT_EQ(s.pair.document, src.document);
    switch (s.provenance.kind) {
      case ProvenanceKind::kSynonymRewrite:
        ASSERT_EQ(s.pair.label, src.label);
        break;
      case ProvenanceKind::kAntonymRewrite:
        ASSERT_EQ(s.pair.label, RelevanceLabel::kIrrelevant);
        ASSERT_NE(src.label, RelevanceLabel::kIrrelevant);
        break;
      case ProvenanceKind::kKeywordGeneration:
        ASSERT_NE(s.provenance.rank, 2);
        ASSERT_EQ(s.pair.label, s.provenance.rank == 1
                                    ? RelevanceLabel::kStrong
                                    : RelevanceLabel::kWeak);
        ASSERT_TRUE(occurs_in(s.pair.query, src.document));
        break;
    }
  }
  const auto again = dedup(result.samples, sources);
  ASSERT_EQ(again.size(), result.samples.size());
}

TEST(AugmentDatasetTest, DeterministicAcrossConcurrency) {
  std::mt19937_64 rng(29);
  const auto sources = random_sources(rng, 120);
  auto llm = mock_provider(3);
  AugmentConfig c = all_ops(3);
  c.max_inflight = 1;
  const auto one = augment_dataset(sources, *llm, c);
  c.max_inflight = 8;
  const auto many = augment_dataset(sources, *llm, c);
  ASSERT_EQ(one.samples.size(), many.samples.size());
  for (std::size_t i = 0; i < one.samples.size(); ++i) {
    ASSERT_EQ(sample_to_json(one.samples[i]), sample_to_json(many.samples[i]));
  }
  EXPECT_EQ(one.report.calls, many.report.calls);
}

TEST(AugmentDatasetTest, AllOpsDisabledGivesNothing) {
  const auto sources = corpus::load_dataset(
      std::filesystem::path(RELEVKIT_TEST_DATA) / "train_small.jsonl");
  ScriptedProvider llm;
  AugmentConfig c;
  c.synonyms = c.antonyms = c.generation = false;
  const auto result = augment_dataset(sources, llm, c);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(llm.calls, 0);
}

TEST(AugmentDatasetTest, DedupDropsRepeatsAndSourceQuery) {
  const std::vector<LabeledPair> sources = {kBeef};
  std::vector<AugmentedSample> samples = {
      {{"b1#syn1", "hot pot", kHotPotDoc, RelevanceLabel::kStrong, {}},
       {ProvenanceKind::kSynonymRewrite, 0}, "b1"},
      {{"b1#gen1", "Hot  pot", kHotPotDoc, RelevanceLabel::kStrong, {}},
       {ProvenanceKind::kKeywordGeneration, 1}, "b1"},
      {{"b1#gen3", "beef hot pot", kHotPotDoc, RelevanceLabel::kWeak, {}},
       {ProvenanceKind::kKeywordGeneration, 3}, "b1"},
  };
  const auto out = dedup(samples, sources);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].pair.id, "b1#syn1");
  EXPECT_EQ(dedup(out, sources).size(), 1u);
}

TEST(AugmentDatasetTest, FailureRateAborts) {
  std::vector<LabeledPair> sources;
  for (int i = 0; i < 10; ++i) {
    sources.push_back({"x" + std::to_string(i), "beef hot pot", kHotPotDoc,
                       RelevanceLabel::kStrong, {}});
  }
  ScriptedProvider llm;  // no replies: every call fails
  AugmentConfig c = all_ops(0);
  EXPECT_THROW(augment_dataset(sources, llm, c), AugmentAborted);

  c.max_failure_rate = 1.0;
  const auto result = augment_dataset(sources, llm, c);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_EQ(result.report.failures.size(), result.report.calls);
  EXPECT_EQ(result.report.calls, 30u);
}

TEST(AugmentDatasetTest, SkewedInputIsRebalanced) {
  std::mt19937_64 rng(31);
  auto sources = random_sources(rng, 200);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::size_t r = i % 50;
    sources[i].label = r < 36   ? RelevanceLabel::kStrong
                       : r < 43 ? RelevanceLabel::kWeak
                                : RelevanceLabel::kIrrelevant;
  }
  auto llm = mock_provider(0);
  AugmentConfig c;
  c.retry = no_sleep();
  const auto result = augment_dataset(sources, *llm, c);
  corpus::DatasetStats original = corpus::stats(sources);
  corpus::DatasetStats merged = original;
  for (const auto& s : result.samples) merged.add(s.pair.label);
  EXPECT_GT(merged.weak, original.weak);
  EXPECT_GT(merged.irrelevant, original.irrelevant);
  const double factor =
      static_cast<double>(merged.total) / static_cast<double>(original.total);
  EXPECT_GE(factor, 2.0);
  EXPECT_LE(factor, 4.0);
}

// The golden file was produced by one run of this configuration and frozen.
// Set RELEVKIT_UPDATE_GOLDEN=1 to rewrite it after an intended change.
TEST(AugmentDatasetTest, GoldenFile) {
  const std::filesystem::path data(RELEVKIT_TEST_DATA);
  const auto sources = corpus::load_dataset(data / "train_small.jsonl");
  auto llm = mock_provider(0);
  const auto result = augment_dataset(sources, *llm, all_ops(0));
  std::ostringstream produced;
  for (const auto& s : result.samples) produced << sample_to_json(s).dump() << '\n';

  const auto golden = data / "augment_golden.jsonl";
  if (std::getenv("RELEVKIT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden) << produced.str();
  }
  std::ifstream in(golden);
  ASSERT_TRUE(in) << golden;
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(produced.str(), expected.str());
}

}  // namespace
}  // namespace relevkit::augment
