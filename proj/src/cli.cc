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

#include "relevkit/cli.h"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "log.h"
#include "relevkit/augment.h"
#include "relevkit/batch.h"
#include "relevkit/config.h"
#include "relevkit/corpus.h"
#include "relevkit/error.h"
#include "relevkit/metrics.h"
#include "relevkit/providers.h"
#include "relevkit/scorer.h"

#ifndef RELEVKIT_VERSION
#define RELEVKIT_VERSION "0.0.0"
#endif

namespace relevkit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kSummarizeChunk = 1024;
constexpr std::size_t kAugmentChunk = 256;

// Opens "-" as the given stream, anything else as a file.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot open " + path);
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(
          path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw DataError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw DataError("write failed for " + path_);
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

struct Flags {
  std::string config_path;
  bool print_config = false;
  bool version = false;
  int workers = 1;
  std::string log_level;

  std::string input = "-";
  std::string output = "-";
  std::size_t qf_max = 128;
  std::size_t doc_max = 64;
  std::size_t total_max = 192;
  std::string separator = "[SEP]";
  bool with_scores = false;

  std::string provider = "mock";
  std::uint64_t seed = 0;
  std::string ops = "syn,ant,gen";
  std::size_t max_inflight = 4;

  std::string predictions = "-";
  std::string score_field = "score";

  std::uint64_t good = 0;
  std::uint64_t same = 0;
  std::uint64_t bad = 0;

  std::size_t n_docs = 300;
  std::uint64_t experiment_seed = 7;
  std::size_t sentences_per_doc = 8;
  std::string write_corpus;
};

struct Given {
  CLI::Option* workers = nullptr;
  CLI::Option* log_level = nullptr;
  std::vector<CLI::Option*> qf_max;
  std::vector<CLI::Option*> doc_max;
  std::vector<CLI::Option*> total_max;
  CLI::Option* separator = nullptr;
  CLI::Option* provider = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* ops = nullptr;
  CLI::Option* max_inflight = nullptr;
};

bool any_given(const std::vector<CLI::Option*>& options) {
  for (auto* o : options) {
    if (o && o->count() > 0) return true;
  }
  return false;
}

PipelineConfig resolve_config(const Flags& f, const Given& g) {
  PipelineConfig c =
      f.config_path.empty() ? PipelineConfig{} : load_config(f.config_path);
  if (g.workers->count()) c.workers = f.workers;
  if (g.log_level->count()) c.log_level = f.log_level;
  if (any_given(g.qf_max)) c.budget.query_focused_max = f.qf_max;
  if (any_given(g.doc_max)) c.budget.doc_summary_max = f.doc_max;
  if (any_given(g.total_max)) c.budget.total_max = f.total_max;
  if (g.separator && g.separator->count()) c.budget.separator = f.separator;
  if (g.provider && g.provider->count()) c.provider.kind = f.provider;
  if (g.seed && g.seed->count()) c.augment.seed = f.seed;
  if (g.max_inflight && g.max_inflight->count()) {
    c.augment.max_inflight = f.max_inflight;
  }
  if (g.ops && g.ops->count()) {
    c.augment.synonyms = c.augment.antonyms = c.augment.generation = false;
    std::stringstream ss(f.ops);
    std::string op;
    while (std::getline(ss, op, ',')) {
      if (op == "syn") {
        c.augment.synonyms = true;
      } else if (op == "ant") {
        c.augment.antonyms = true;
      } else if (op == "gen") {
        c.augment.generation = true;
      } else if (!op.empty()) {
        throw UsageError("unknown op '" + op + "' (expected syn, ant, gen)");
      }
    }
  }
  if (c.workers < 1) throw UsageError("--workers must be at least 1");
  return c;
}

void set_log_level(const std::string& level) {
  const auto parsed = spdlog::level::from_str(level);
  if (parsed == spdlog::level::off && level != "off") {
    throw UsageError("unknown log level '" + level + "'");
  }
  logger()->set_level(parsed);
}

Json summary_record(const corpus::LabeledPair& pair,
                    const summarizer::MixSummary& mix, bool with_scores,
                    const scorer::Thresholds& thresholds) {
  Json record = corpus::record_to_json(pair);
  record["query_focused"] = mix.query_focused;
  record["doc_summary"] = mix.doc_summary;
  record["mix_summary"] = mix.combined;
  if (with_scores) {
    const auto p = scorer::score(pair.query, mix, thresholds);
    const auto q =
        scorer::score_query_focused_only(pair.query, mix.query_focused,
                                         thresholds);
    record["score"] = p.score;
    record["predicted"] = corpus::label_name(p.label);
    record["score_qf_only"] = q.score;
    record["predicted_qf_only"] = corpus::label_name(q.label);
  }
  return record;
}

int cmd_summarize(const Flags& f, const PipelineConfig& c, std::istream& in,
                  std::ostream& out) {
  c.budget.validate();
  Input input(f.input, in);
  Output output(f.output, out);
  corpus::DatasetReader reader(input.get());
  corpus::DatasetWriter writer(output.get());
  std::vector<corpus::LabeledPair> chunk;
  bool done = false;
  while (!done) {
    chunk.clear();
    while (chunk.size() < kSummarizeChunk) {
      auto pair = reader.next();
      if (!pair) {
        done = true;
        break;
      }
      chunk.push_back(std::move(*pair));
    }
    const auto mixes = summarizer::summarize_batch(chunk, c.budget, c.workers);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      writer.write_json(
          summary_record(chunk[i], mixes[i], f.with_scores, c.scorer));
    }
  }
  output.finish();
  return kOk;
}

std::unique_ptr<augment::LlmProvider> make_provider(const PipelineConfig& c) {
  if (c.provider.kind == "mock") return augment::mock_provider(c.augment.seed);
  if (c.provider.kind != "http") {
    throw UsageError("unknown provider '" + c.provider.kind + "'");
  }
  const char* url = std::getenv(c.provider.url_env.c_str());
  const char* key = std::getenv(c.provider.key_env.c_str());
  std::vector<std::string> missing;
  if (url == nullptr || *url == '\0') missing.push_back(c.provider.url_env);
  if (key == nullptr || *key == '\0') missing.push_back(c.provider.key_env);
  if (!missing.empty()) {
    std::string names;
    for (const auto& m : missing) names += (names.empty() ? "" : ", ") + m;
    throw ProviderError("http provider needs environment variable(s): " + names,
                        false);
  }
  augment::HttpProviderConfig hc;
  hc.url = url;
  hc.api_key = key;
  hc.model = c.provider.model;
  hc.timeout = std::chrono::seconds(c.provider.timeout_seconds);
  return augment::http_provider(std::move(hc));
}

int cmd_augment(const Flags& f, const PipelineConfig& c, std::istream& in,
                std::ostream& out, std::ostream& err) {
  auto llm = make_provider(c);
  Input input(f.input, in);
  Output output(f.output, out);
  corpus::DatasetReader reader(input.get());
  corpus::DatasetWriter writer(output.get());

  augment::AugmentConfig config = c.augment;
  if (c.workers > 1) config.workers = static_cast<std::size_t>(c.workers);
  // Checked cumulatively below rather than per chunk.
  config.max_failure_rate = 1.0;

  std::size_t sources = 0;
  std::size_t produced = 0;
  augment::AugmentReport total;
  std::vector<corpus::LabeledPair> chunk;
  bool done = false;
  while (!done) {
    chunk.clear();
    while (chunk.size() < kAugmentChunk) {
      auto pair = reader.next();
      if (!pair) {
        done = true;
        break;
      }
      chunk.push_back(std::move(*pair));
    }
    if (chunk.empty()) break;
    sources += chunk.size();
    auto result = augment::augment_dataset(chunk, *llm, config);
    for (const auto& sample : result.samples) {
      writer.write_json(augment::sample_to_json(sample));
    }
    produced += result.samples.size();
    total.calls += result.report.calls;
    for (auto& failure : result.report.failures) {
      logger()->warn("{} ({}): {}", failure.source_id, failure.op,
                     failure.message);
      total.failures.push_back(std::move(failure));
    }
    if (total.failure_rate() > c.augment.max_failure_rate) {
      throw augment::AugmentAborted(
          std::to_string(total.failures.size()) + " of " +
          std::to_string(total.calls) +
          " provider calls failed, above max_failure_rate");
    }
  }
  output.finish();
  err << "augment: " << produced << " samples from " << sources
      << " sources; " << total.failures.size() << "/" << total.calls
      << " provider calls failed\n";
  return kOk;
}

int cmd_evaluate(const Flags& f, std::istream& in, std::ostream& out) {
  Input input(f.predictions, in);
  std::vector<metrics::ScoredPrediction> predictions;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input.get(), line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(where + "malformed JSON: " + e.what());
    }
    if (!record.is_object()) throw DataError(where + "expected a JSON object");
    auto label = record.find("label");
    if (label == record.end()) throw DataError(where + "missing field label");
    auto parsed = label->is_string()
                      ? corpus::parse_label(label->get<std::string>())
                      : std::nullopt;
    if (!parsed) throw DataError(where + "invalid label");
    auto score = record.find(f.score_field);
    if (score == record.end()) {
      throw DataError(where + "missing field " + f.score_field);
    }
    if (!score->is_number()) {
      throw DataError(where + "field " + f.score_field + " must be a number");
    }
    predictions.push_back({*parsed, score->get<double>()});
  }
  Json result = Json::object();
  result["auc"] = metrics::multiclass_auc(predictions);
  result["n"] = predictions.size();
  out << result.dump() << '\n';
  return kOk;
}

int cmd_gsb(const Flags& f, std::ostream& out) {
  Json result = Json::object();
  result["delta_gsb"] = metrics::delta_gsb({f.good, f.same, f.bad});
  out << result.dump() << '\n';
  return kOk;
}

int cmd_stats(const Flags& f, std::istream& in, std::ostream& out) {
  Input input(f.input, in);
  corpus::DatasetReader reader(input.get());
  corpus::DatasetStats stats;
  while (auto pair = reader.next()) stats.add(pair->label);
  out << stats.to_json().dump() << '\n';
  return kOk;
}

int cmd_experiment(const Flags& f, const PipelineConfig& c, std::ostream& out) {
  scorer::SyntheticSpec spec;
  spec.n_docs = f.n_docs;
  spec.seed = f.experiment_seed;
  spec.sentences_per_doc = f.sentences_per_doc;
  if (!f.write_corpus.empty()) {
    corpus::write_dataset(f.write_corpus, scorer::synthesize_corpus(spec));
  }
  const auto report =
      scorer::run_experiment(spec, c.budget, c.scorer, c.workers);
  out << report.to_json().dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Flags f;
  Given g;
  CLI::App app{"relevkit: relevance data pipeline toolkit", "relevkit"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--config", f.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_flag("--print-config", f.print_config,
               "Print the resolved configuration and exit");
  app.add_flag("--version", f.version, "Print toolkit and schema versions");
  g.workers = app.add_option("--workers", f.workers, "Worker threads");
  g.log_level = app.add_option("--log-level", f.log_level,
                               "trace, debug, info, warn, error or off");

  auto add_budget = [&](CLI::App* sub) {
    g.qf_max.push_back(sub->add_option("--qf-max", f.qf_max,
                                       "Query-focused token budget"));
    g.doc_max.push_back(sub->add_option("--doc-max", f.doc_max,
                                        "Document-summary token budget"));
    g.total_max.push_back(
        sub->add_option("--total-max", f.total_max, "Total token budget"));
  };

  auto* summarize = app.add_subcommand("summarize", "Add mix-structured summaries");
  summarize->add_option("--input", f.input, "Dataset JSONL ('-' for stdin)");
  summarize->add_option("--output", f.output, "Output JSONL ('-' for stdout)");
  add_budget(summarize);
  g.separator = summarize->add_option("--sep", f.separator, "Segment separator");
  summarize->add_flag("--with-scores", f.with_scores,
                      "Also add heuristic scores (score, score_qf_only)");

  auto* aug = app.add_subcommand("augment", "LLM query rewriting and generation");
  aug->add_option("--input", f.input, "Dataset JSONL ('-' for stdin)");
  aug->add_option("--output", f.output, "Output JSONL ('-' for stdout)");
  g.provider = aug->add_option("--provider", f.provider, "mock or http")
                   ->check(CLI::IsMember({"mock", "http"}));
  g.seed = aug->add_option("--seed", f.seed, "Seed for sampling and the mock");
  g.ops = aug->add_option("--ops", f.ops, "Comma list of syn, ant, gen");
  g.max_inflight =
      aug->add_option("--max-inflight", f.max_inflight, "Concurrent calls");

  auto* evaluate = app.add_subcommand("evaluate", "Multiclass AUC of predictions");
  evaluate->add_option("--predictions", f.predictions,
                       "JSONL with label and score ('-' for stdin)");
  evaluate->add_option("--score-field", f.score_field, "Score field name");

  auto* gsb = app.add_subcommand("gsb", "Delta GSB from judgment counts");
  gsb->add_option("--good", f.good)->required();
  gsb->add_option("--same", f.same)->required();
  gsb->add_option("--bad", f.bad)->required();

  auto* stats = app.add_subcommand("stats", "Per-class record counts");
  stats->add_option("--input", f.input, "Dataset JSONL ('-' for stdin)");

  auto* experiment = app.add_subcommand(
      "experiment", "Mix-structured vs query-focused-only on synthetic data");
  experiment->add_option("--n-docs", f.n_docs, "Corpus size");
  experiment->add_option("--seed", f.experiment_seed, "Corpus seed");
  experiment->add_option("--sentences-per-doc", f.sentences_per_doc);
  experiment->add_option("--write-corpus", f.write_corpus,
                         "Also write the synthetic corpus as JSONL");
  add_budget(experiment);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "relevkit: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (f.version) {
      out << "relevkit " << RELEVKIT_VERSION << " (schema "
          << kSchemaVersion << ")\n";
      return kOk;
    }
    const PipelineConfig config = resolve_config(f, g);
    set_log_level(config.log_level);
    if (f.print_config) {
      out << to_json(config).dump(2) << '\n';
      return kOk;
    }
    if (*summarize) return cmd_summarize(f, config, in, out);
    if (*aug) return cmd_augment(f, config, in, out, err);
    if (*evaluate) return cmd_evaluate(f, in, out);
    if (*gsb) return cmd_gsb(f, out);
    if (*stats) return cmd_stats(f, in, out);
    if (*experiment) return cmd_experiment(f, config, out);
    err << "relevkit: missing subcommand\n" << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "relevkit: " << e.what() << '\n';
    return kUsage;
  } catch (const ProviderError& e) {
    err << "relevkit: provider error: " << e.what() << '\n';
    return kProvider;
  } catch (const std::exception& e) {
    err << "relevkit: " << e.what() << '\n';
    return kData;
  }
}

}  // namespace relevkit::cli
