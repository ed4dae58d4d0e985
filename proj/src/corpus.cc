// Copyright 2026 The CTRP Authors.
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

#include "ctrp/corpus.h"

#include <algorithm>
#include <string>

#include "ctrp/error.h"
#include "ctrp/text.h"
#include "json.hpp"

namespace ctrp {

using json = nlohmann::json;

Document ParseDocument(std::string_view line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::exception &e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ValidationError("record is not an object");

  auto string_field = [&](const char *key) -> std::string {
    auto it = record.find(key);
    if (it == record.end() || !it->is_string()) {
      throw ValidationError(std::string("missing string field \"") + key +
                            "\"");
    }
    return it->get<std::string>();
  };

  Document doc;
  doc.id = string_field("id");
  if (doc.id.empty()) throw ValidationError("empty document id");
  doc.title = string_field("title");

  auto sections = record.find("sections");
  if (sections == record.end() || !sections->is_array()) {
    throw ValidationError("missing array field \"sections\"");
  }
  for (const json &s : *sections) {
    if (!s.is_object()) throw ValidationError("section is not an object");
    Section section;
    auto name = s.find("name");
    if (name != s.end() && !name->is_null()) {
      if (!name->is_string()) throw ValidationError("section name not string");
      section.name = name->get<std::string>();
    }
    auto text = s.find("text");
    if (text == s.end() || !text->is_string()) {
      throw ValidationError("section without text");
    }
    section.text = NormalizeWhitespace(text->get<std::string>());
    if (section.text.empty()) throw ValidationError("empty section text");
    doc.sections.push_back(std::move(section));
  }
  return doc;
}

std::string DocumentToJson(const Document &doc) {
  json sections = json::array();
  for (const Section &s : doc.sections) {
    json entry;
    entry["name"] = s.name ? json(*s.name) : json(nullptr);
    entry["text"] = s.text;
    sections.push_back(std::move(entry));
  }
  json record;
  record["id"] = doc.id;
  record["title"] = doc.title;
  record["sections"] = std::move(sections);
  return record.dump();
}

std::string ChunkToJson(const ChunkedAbstract &chunk) {
  json record;
  record["doc_id"] = chunk.doc_id;
  record["background_method"] = chunk.background_method;
  record["result_conclusion"] = chunk.result_conclusion;
  return record.dump();
}

bool CorpusReader::Next(Document *doc) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (Trim(line).empty()) continue;
    try {
      Document parsed = ParseDocument(line);
      auto pos = std::lower_bound(seen_ids_.begin(), seen_ids_.end(),
                                  parsed.id);
      if (pos != seen_ids_.end() && *pos == parsed.id) {
        throw ValidationError("duplicate document id \"" + parsed.id + "\"");
      }
      seen_ids_.insert(pos, parsed.id);
      ++summary_.documents;
      *doc = std::move(parsed);
      return true;
    } catch (const Error &e) {
      ++summary_.skipped;
      summary_.issues.push_back({line_number_, e.what()});
    }
  }
  if (in_.bad()) {
    throw InputError("corpus stream failed after line " +
                     std::to_string(line_number_));
  }
  return false;
}

std::vector<Document> ParseCorpus(std::istream &in, ParseSummary *summary) {
  CorpusReader reader(in);
  std::vector<Document> docs;
  Document doc;
  while (reader.Next(&doc)) docs.push_back(std::move(doc));
  if (summary != nullptr) *summary = reader.summary();
  return docs;
}

// ---------------------------------------------------------------------------
// Sentence segmentation.

const std::vector<std::string> &SentenceSegmenter::DefaultAbbreviations() {
  static const std::vector<std::string> kDefaults = {"vs.", "e.g.", "i.e.",
                                                     "Fig.", "al."};
  return kDefaults;
}

SentenceSegmenter::SentenceSegmenter()
    : SentenceSegmenter(DefaultAbbreviations()) {}

SentenceSegmenter::SentenceSegmenter(std::vector<std::string> abbreviations) {
  for (const std::string &a : abbreviations) {
    abbreviations_.push_back(ToLower(Trim(a)));
  }
}

SentenceSegmenter SentenceSegmenter::FromStream(std::istream &in) {
  std::vector<std::string> abbreviations;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    abbreviations.emplace_back(entry);
  }
  return SentenceSegmenter(std::move(abbreviations));
}

std::vector<std::string> SentenceSegmenter::Segment(
    std::string_view text) const {
  const std::string normalized = NormalizeWhitespace(text);
  std::vector<std::string> sentences;
  size_t start = 0;
  const size_t n = normalized.size();
  for (size_t i = 0; i + 2 < n; ++i) {
    const char c = normalized[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (normalized[i + 1] != ' ' || !IsAsciiUpper(normalized[i + 2])) continue;
    if (c == '.') {
      size_t word_begin = normalized.rfind(' ', i);
      word_begin = word_begin == std::string::npos ? 0 : word_begin + 1;
      std::string word =
          ToLower(std::string_view(normalized).substr(word_begin,
                                                      i + 1 - word_begin));
      if (std::find(abbreviations_.begin(), abbreviations_.end(), word) !=
          abbreviations_.end()) {
        continue;
      }
    }
    sentences.push_back(normalized.substr(start, i + 1 - start));
    start = i + 2;
  }
  if (start < n) sentences.push_back(normalized.substr(start));
  return sentences;
}

// ---------------------------------------------------------------------------
// Section routing.

SectionMap SectionMap::Default() {
  SectionMap map;
  for (const char *p : {"BACKGROUND", "INTRODUCTION", "OBJECTIVE", "AIM",
                        "METHOD", "DESIGN", "SETTING", "PARTICIPANTS",
                        "MATERIALS"}) {
    map.prefixes_.emplace_back(p, SectionRole::kBackgroundMethod);
  }
  for (const char *p : {"RESULT", "FINDING", "CONCLUSION", "DISCUSSION",
                        "INTERPRETATION", "OUTCOME"}) {
    map.prefixes_.emplace_back(p, SectionRole::kResultConclusion);
  }
  return map;
}

SectionMap SectionMap::FromTsv(std::istream &in) {
  SectionMap map;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty() || Trim(line).front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw ValidationError("section map line " + std::to_string(line_number) +
                            ": expected 2 fields");
    }
    std::string prefix(Trim(fields[0]));
    for (char &c : prefix) {
      if (IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
    }
    std::string_view role = Trim(fields[1]);
    if (role == "background_method") {
      map.prefixes_.emplace_back(prefix, SectionRole::kBackgroundMethod);
    } else if (role == "result_conclusion") {
      map.prefixes_.emplace_back(prefix, SectionRole::kResultConclusion);
    } else {
      throw ValidationError("section map line " + std::to_string(line_number) +
                            ": unknown role \"" + std::string(role) + "\"");
    }
  }
  return map;
}

SectionRole SectionMap::Route(std::string_view section_name) const {
  std::string name(Trim(section_name));
  for (char &c : name) {
    if (IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
  }
  size_t best = 0;
  SectionRole role = SectionRole::kBackgroundMethod;
  for (const auto &[prefix, r] : prefixes_) {
    if (prefix.size() > best && StartsWith(name, prefix)) {
      best = prefix.size();
      role = r;
    }
  }
  return role;
}

std::string SectionMap::ToTsv() const {
  std::string out;
  for (const auto &[prefix, role] : prefixes_) {
    out += prefix;
    out += role == SectionRole::kBackgroundMethod ? "\tbackground_method\n"
                                                  : "\tresult_conclusion\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chunking.

ChunkedAbstract ChunkAbstract(const Document &doc,
                              const SentenceSegmenter &segmenter,
                              const SectionMap &sections,
                              const SentencePredicate &is_evidence) {
  std::vector<std::string> background;
  std::vector<std::string> results;
  // Once the first evidence sentence of unnamed text is seen, the rest of
  // the unnamed text belongs to the result/conclusion part.
  bool unnamed_in_results = false;
  for (const Section &section : doc.sections) {
    std::vector<std::string> sentences = segmenter.Segment(section.text);
    if (section.name) {
      auto &target =
          sections.Route(*section.name) == SectionRole::kResultConclusion
              ? results
              : background;
      for (std::string &s : sentences) target.push_back(std::move(s));
      continue;
    }
    for (std::string &s : sentences) {
      if (!unnamed_in_results && is_evidence(s)) unnamed_in_results = true;
      (unnamed_in_results ? results : background).push_back(std::move(s));
    }
  }
  return {doc.id, Join(background, " "), Join(results, " ")};
}

}  // namespace ctrp
