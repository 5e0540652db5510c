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

#ifndef RELEVKIT_PROMPTS_H_
#define RELEVKIT_PROMPTS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relevkit::augment {

enum class PromptTask { kSynonym, kAntonym, kKeywords };

struct PromptTemplate {
  std::string role_instruction;
  std::string constraints;
  std::vector<std::pair<std::string, std::string>> few_shot_examples;
  std::string output_format_instruction;

  // Layout:
  //   <role>\n\nConstraints:\n<constraints>\n\nExamples:\n
  //   Input: ..\nOutput:\n..\n\n (per example)
  //   <format>\n\nInput: <target>\nOutput:
  // The target is inserted once, after every fixed part.
  std::string render(std::string_view target) const;
};

const PromptTemplate& prompt_template(PromptTask task);

// Recognizes one of the built-in templates by its role instruction.
std::optional<PromptTask> detect_task(std::string_view prompt);

// The target inserted by PromptTemplate::render, or nullopt if the prompt
// does not have that shape.
std::optional<std::string> extract_target(std::string_view prompt);

// One candidate per line; trims, drops blank lines and list bullets
// ("- ", "* ", "1. ", "2) "). Throws CompletionParseError for completions
// that are not UTF-8 or have a line too long to be a query.
std::vector<std::string> parse_candidates(const std::string& completion);

// First non-blank line split on '>'. Throws CompletionParseError unless it
// holds exactly three non-empty keywords.
std::array<std::string, 3> parse_keywords(const std::string& completion);

}  // namespace relevkit::augment

#endif  // RELEVKIT_PROMPTS_H_
