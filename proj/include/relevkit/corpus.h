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

#ifndef RELEVKIT_CORPUS_H_
#define RELEVKIT_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace relevkit::corpus {

enum class RelevanceLabel { kStrong, kWeak, kIrrelevant };

inline constexpr RelevanceLabel kAllLabels[] = {
    RelevanceLabel::kStrong, RelevanceLabel::kWeak,
    RelevanceLabel::kIrrelevant};

// Reference relevance score used by the multiclass AUC: 1, 0.7 and 0.
constexpr double score(RelevanceLabel label) {
  switch (label) {
    case RelevanceLabel::kStrong:
      return 1.0;
    case RelevanceLabel::kWeak:
      return 0.7;
    case RelevanceLabel::kIrrelevant:
      return 0.0;
  }
  return 0.0;
}

// Lowercase wire name: "strong", "weak" or "irrelevant".
std::string_view label_name(RelevanceLabel label);

// Case-insensitive inverse of label_name.
std::optional<RelevanceLabel> parse_label(std::string_view text);

struct LabeledPair {
  std::string id;
  std::string query;
  std::string document;
  RelevanceLabel label = RelevanceLabel::kStrong;
  // Fields other than id/query/document/label, echoed on write in the order
  // they were read.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct DatasetStats {
  std::uint64_t strong = 0;
  std::uint64_t weak = 0;
  std::uint64_t irrelevant = 0;
  std::uint64_t total = 0;

  void add(RelevanceLabel label);
  std::uint64_t count(RelevanceLabel label) const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats stats(std::span<const LabeledPair> dataset);

// Parses one dataset line. `line_number` is 1-based and is used both in error
// messages and to synthesize `line-<n>` ids. Throws DataError.
LabeledPair parse_record(std::string_view line, std::size_t line_number);

// Serializes a record to a single JSON line (no trailing newline).
std::string format_record(const LabeledPair& pair);

nlohmann::ordered_json record_to_json(const LabeledPair& pair);

// Streams records out of a JSONL source. Blank lines are skipped but still
// counted for line numbers. Duplicate ids are detected across the whole
// stream, so memory grows with the number of distinct ids.
class DatasetReader {
 public:
  explicit DatasetReader(std::istream& in) : in_(in) {}

  // Returns std::nullopt at end of input. Throws DataError.
  std::optional<LabeledPair> next();

  std::size_t line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

class DatasetWriter {
 public:
  explicit DatasetWriter(std::ostream& out) : out_(out) {}

  void write(const LabeledPair& pair);
  void write_json(const nlohmann::ordered_json& record);

 private:
  std::ostream& out_;
};

// Reads a whole dataset file. Throws DataError for unreadable files and
// malformed records.
std::vector<LabeledPair> load_dataset(const std::filesystem::path& path);

void write_dataset(const std::filesystem::path& path,
                   std::span<const LabeledPair> dataset);

}  // namespace relevkit::corpus

#endif  // RELEVKIT_CORPUS_H_
