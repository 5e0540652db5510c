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

#include "relevkit/corpus.h"

#include <algorithm>
#include <cctype>

#include "relevkit/error.h"
#include "relevkit/utf8.h"

namespace relevkit::corpus {

namespace {

using Json = nlohmann::ordered_json;

std::string line_error(std::size_t line, const std::string& reason) {
  return "line " + std::to_string(line) + ": " + reason;
}

std::string required_text(const Json& record, const char* field,
                          std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw DataError(line_error(line, std::string("missing field ") + field));
  }
  if (!it->is_string()) {
    throw DataError(
        line_error(line, std::string("field ") + field + " must be a string"));
  }
  auto value = it->get<std::string>();
  if (utf8::trim(value).empty()) {
    throw DataError(line_error(line, std::string("empty ") + field));
  }
  return value;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

std::string_view label_name(RelevanceLabel label) {
  switch (label) {
    case RelevanceLabel::kStrong:
      return "strong";
    case RelevanceLabel::kWeak:
      return "weak";
    case RelevanceLabel::kIrrelevant:
      return "irrelevant";
  }
  return "irrelevant";
}

std::optional<RelevanceLabel> parse_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (RelevanceLabel label : kAllLabels) {
    if (lower == label_name(label)) return label;
  }
  return std::nullopt;
}

void DatasetStats::add(RelevanceLabel label) {
  switch (label) {
    case RelevanceLabel::kStrong:
      ++strong;
      break;
    case RelevanceLabel::kWeak:
      ++weak;
      break;
    case RelevanceLabel::kIrrelevant:
      ++irrelevant;
      break;
  }
  ++total;
}

std::uint64_t DatasetStats::count(RelevanceLabel label) const {
  switch (label) {
    case RelevanceLabel::kStrong:
      return strong;
    case RelevanceLabel::kWeak:
      return weak;
    case RelevanceLabel::kIrrelevant:
      return irrelevant;
  }
  return 0;
}

nlohmann::ordered_json DatasetStats::to_json() const {
  Json out = Json::object();
  out["strong"] = strong;
  out["weak"] = weak;
  out["irrelevant"] = irrelevant;
  out["total"] = total;
  return out;
}

DatasetStats stats(std::span<const LabeledPair> dataset) {
  DatasetStats result;
  for (const LabeledPair& pair : dataset) result.add(pair.label);
  return result;
}

LabeledPair parse_record(std::string_view line, std::size_t line_number) {
  if (!utf8::is_valid(line)) {
    throw DataError(line_error(line_number, "invalid UTF-8"));
  }
  Json record;
  try {
    record = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw DataError(
        line_error(line_number, std::string("malformed JSON: ") + e.what()));
  }
  if (!record.is_object()) {
    throw DataError(line_error(line_number, "expected a JSON object"));
  }

  LabeledPair pair;
  pair.query = required_text(record, "query", line_number);
  pair.document = required_text(record, "document", line_number);

  auto label_it = record.find("label");
  if (label_it == record.end()) {
    throw DataError(line_error(line_number, "missing field label"));
  }
  if (!label_it->is_string()) {
    throw DataError(line_error(line_number, "field label must be a string"));
  }
  auto label = parse_label(label_it->get<std::string>());
  if (!label) {
    throw DataError(line_error(
        line_number, "invalid label '" + label_it->get<std::string>() + "'"));
  }
  pair.label = *label;

  auto id_it = record.find("id");
  if (id_it == record.end() || id_it->is_null()) {
    pair.id = "line-" + std::to_string(line_number);
  } else if (id_it->is_string()) {
    pair.id = id_it->get<std::string>();
  } else if (id_it->is_number_integer()) {
    pair.id = id_it->dump();
  } else {
    throw DataError(line_error(line_number, "field id must be a string"));
  }

  for (auto it = record.begin(); it != record.end(); ++it) {
    const std::string& key = it.key();
    if (key == "id" || key == "query" || key == "document" || key == "label") {
      continue;
    }
    pair.extra[key] = it.value();
  }
  return pair;
}

nlohmann::ordered_json record_to_json(const LabeledPair& pair) {
  Json out = Json::object();
  out["id"] = pair.id;
  out["query"] = pair.query;
  out["document"] = pair.document;
  out["label"] = label_name(pair.label);
  for (auto it = pair.extra.begin(); it != pair.extra.end(); ++it) {
    out[it.key()] = it.value();
  }
  return out;
}

std::string format_record(const LabeledPair& pair) {
  return record_to_json(pair).dump();
}

std::optional<LabeledPair> DatasetReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    LabeledPair pair = parse_record(line, line_number_);
    if (!seen_ids_.insert(pair.id).second) {
      throw DataError(line_error(line_number_, "duplicate id " + pair.id));
    }
    return pair;
  }
  if (in_.bad()) throw DataError("read error");
  return std::nullopt;
}

void DatasetWriter::write(const LabeledPair& pair) {
  write_json(record_to_json(pair));
}

void DatasetWriter::write_json(const nlohmann::ordered_json& record) {
  out_ << record.dump() << '\n';
}

std::vector<LabeledPair> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  DatasetReader reader(in);
  std::vector<LabeledPair> out;
  while (auto pair = reader.next()) out.push_back(std::move(*pair));
  return out;
}

void write_dataset(const std::filesystem::path& path,
                   std::span<const LabeledPair> dataset) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  DatasetWriter writer(out);
  for (const LabeledPair& pair : dataset) writer.write(pair);
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace relevkit::corpus
