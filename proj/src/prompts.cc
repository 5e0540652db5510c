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

#include "relevkit/prompts.h"

#include <algorithm>
#include <sstream>

#include "relevkit/error.h"
#include "relevkit/utf8.h"

namespace relevkit::augment {

namespace {

constexpr std::size_t kMaxCandidateBytes = 256;
constexpr std::string_view kInputMarker = "\nInput: ";
constexpr std::string_view kOutputMarker = "\nOutput:";

PromptTemplate make_synonym() {
  PromptTemplate t;
  t.role_instruction =
      "You are a synonym generator for search queries. Given a user query, "
      "write alternative queries a different user could type to look for "
      "exactly the same thing.";
  t.constraints =
      "- Keep the meaning of the query unchanged.\n"
      "- Change the wording: swap words for synonyms, rephrase, or reorder.\n"
      "- Prefer rewrites that are hard to tell apart from the original.\n"
      "- Write at most 3 rewrites and never repeat the original query.";
  t.few_shot_examples = {
      {"cheap eats near the station",
       "budget food close to the station\naffordable restaurants by the "
       "station"},
      {"kid friendly museum", "family museum\nmuseum suitable for children"},
  };
  t.output_format_instruction =
      "Answer with one rewritten query per line and nothing else.";
  return t;
}

PromptTemplate make_antonym() {
  PromptTemplate t;
  t.role_instruction =
      "You are an antonym generator for search queries. Given a user query, "
      "write queries that look almost the same but ask for the opposite or an "
      "incompatible thing.";
  t.constraints =
      "- Reuse most of the words of the query.\n"
      "- The meaning must contradict or exclude the original intent.\n"
      "- A document that answers the original query must not answer yours.\n"
      "- Write exactly 1 query.";
  t.few_shot_examples = {
      {"quiet cafe for studying", "noisy cafe for parties"},
      {"vegetarian noodle shop", "meat noodle shop"},
  };
  t.output_format_instruction = "Answer with the query on a single line.";
  return t;
}

PromptTemplate make_keywords() {
  PromptTemplate t;
  t.role_instruction =
      "You are a keyword extractor for a search engine. Given a document, "
      "pick the keywords a user might search for to find it.";
  t.constraints =
      "- Extract exactly 3 keywords or short phrases.\n"
      "- Copy each keyword from the document text; do not invent words.\n"
      "- Order them from most to least important to the document.";
  t.few_shot_examples = {
      {"The lakeside trail is flat and shaded, ideal for a slow walk. Bring "
       "water; there is one kiosk near the boathouse.",
       "lakeside trail>slow walk>boathouse"},
  };
  t.output_format_instruction =
      "Answer with the three keywords on one line separated by '>', most "
      "important first.";
  return t;
}

const std::array<PromptTemplate, 3>& templates() {
  static const std::array<PromptTemplate, 3> kTemplates = {
      make_synonym(), make_antonym(), make_keywords()};
  return kTemplates;
}

std::string_view strip_bullet(std::string_view line) {
  if (line.starts_with("- ") || line.starts_with("* ")) {
    return line.substr(2);
  }
  if (line.starts_with("• ")) return line.substr(4);
  std::size_t i = 0;
  while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
  if (i > 0 && i + 1 < line.size() && (line[i] == '.' || line[i] == ')') &&
      line[i + 1] == ' ') {
    return line.substr(i + 2);
  }
  return line;
}

}  // namespace

std::string PromptTemplate::render(std::string_view target) const {
  std::string out;
  out += role_instruction;
  out += "\n\nConstraints:\n";
  out += constraints;
  out += "\n\nExamples:\n";
  for (const auto& [input, output] : few_shot_examples) {
    out += "Input: ";
    out += input;
    out += "\nOutput:\n";
    out += output;
    out += "\n\n";
  }
  out += output_format_instruction;
  out += "\n";
  out += kInputMarker;
  out += target;
  out += kOutputMarker;
  return out;
}

const PromptTemplate& prompt_template(PromptTask task) {
  return templates()[static_cast<std::size_t>(task)];
}

std::optional<PromptTask> detect_task(std::string_view prompt) {
  for (PromptTask task :
       {PromptTask::kSynonym, PromptTask::kAntonym, PromptTask::kKeywords}) {
    if (prompt.starts_with(prompt_template(task).role_instruction)) return task;
  }
  return std::nullopt;
}

std::optional<std::string> extract_target(std::string_view prompt) {
  const auto task = detect_task(prompt);
  if (!task || !prompt.ends_with(kOutputMarker)) return std::nullopt;
  const std::string_view body =
      prompt.substr(0, prompt.size() - kOutputMarker.size());
  const std::string head = prompt_template(*task).output_format_instruction +
                           "\n" + std::string(kInputMarker);
  const auto pos = body.find(head);
  if (pos == std::string_view::npos) return std::nullopt;
  return std::string(body.substr(pos + head.size()));
}

std::vector<std::string> parse_candidates(const std::string& completion) {
  if (!utf8::is_valid(completion)) {
    throw CompletionParseError("completion is not valid UTF-8", completion);
  }
  std::vector<std::string> out;
  std::istringstream in(completion);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view text = utf8::trim(strip_bullet(utf8::trim(line)));
    if (text.empty()) continue;
    if (text.size() > kMaxCandidateBytes) {
      throw CompletionParseError("completion line too long for a query",
                                 completion);
    }
    out.emplace_back(text);
  }
  return out;
}

std::array<std::string, 3> parse_keywords(const std::string& completion) {
  if (!utf8::is_valid(completion)) {
    throw CompletionParseError("completion is not valid UTF-8", completion);
  }
  std::istringstream in(completion);
  std::string line;
  while (std::getline(in, line) && utf8::trim(line).empty()) {
  }
  std::vector<std::string> parts;
  std::string_view rest = line;
  for (;;) {
    const auto pos = rest.find('>');
    parts.emplace_back(utf8::trim(rest.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    rest = rest.substr(pos + 1);
  }
  if (parts.size() != 3 ||
      std::any_of(parts.begin(), parts.end(),
                  [](const std::string& p) { return p.empty(); })) {
    throw CompletionParseError(
        "expected 3 keywords separated by '>', got '" + line + "'",
        completion);
  }
  return {parts[0], parts[1], parts[2]};
}

}  // namespace relevkit::augment
