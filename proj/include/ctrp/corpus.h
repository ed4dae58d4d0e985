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

// Corpus records, sentence segmentation and abstract chunking.
//
// A corpus is line-delimited JSON, one document per line:
//   {"id": "...", "title": "...",
//    "sections": [{"name": "RESULTS" | null, "text": "..."}, ...]}
//
// Chunking splits an abstract into a background/method part (the context
// paired with every mined sentence) and a result/conclusion part (where
// comparative sentences are mined). Named sections are routed through a
// SectionMap; unnamed text is split at the first sentence the supplied
// detector accepts.

#ifndef CTRP_CORPUS_H_
#define CTRP_CORPUS_H_

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctrp {

struct Section {
  std::optional<std::string> name;
  std::string text;
};

struct Document {
  std::string id;
  std::string title;
  std::vector<Section> sections;
};

struct ChunkedAbstract {
  std::string doc_id;
  std::string background_method;
  std::string result_conclusion;
};

// Parses one JSONL record. Throws ValidationError on malformed input.
// Section text is whitespace-normalized and must be nonempty afterwards.
Document ParseDocument(std::string_view line);
std::string DocumentToJson(const Document &doc);
std::string ChunkToJson(const ChunkedAbstract &chunk);

struct ParseIssue {
  size_t line = 0;  // 1-based
  std::string message;
};

struct ParseSummary {
  size_t documents = 0;
  size_t skipped = 0;
  std::vector<ParseIssue> issues;
};

// Streams documents out of a JSONL corpus in input order. Malformed lines
// are skipped and recorded in summary(); blank lines are ignored. Duplicate
// ids are treated as malformed.
class CorpusReader {
 public:
  explicit CorpusReader(std::istream &in) : in_(in) {}

  // Returns false at end of stream. Throws InputError if the stream fails
  // for reasons other than EOF.
  bool Next(Document *doc);

  const ParseSummary &summary() const { return summary_; }

 private:
  std::istream &in_;
  size_t line_number_ = 0;
  std::vector<std::string> seen_ids_;  // sorted
  ParseSummary summary_;
};

std::vector<Document> ParseCorpus(std::istream &in, ParseSummary *summary);

// Splits at ./!/? followed by whitespace and an uppercase letter, unless the
// word ending at the mark is a guarded abbreviation.
class SentenceSegmenter {
 public:
  SentenceSegmenter();
  explicit SentenceSegmenter(std::vector<std::string> abbreviations);

  static const std::vector<std::string> &DefaultAbbreviations();
  // One abbreviation per line; '#' starts a comment.
  static SentenceSegmenter FromStream(std::istream &in);

  // Sentences of the whitespace-normalized text. Joining them with single
  // spaces reproduces NormalizeWhitespace(text).
  std::vector<std::string> Segment(std::string_view text) const;

 private:
  std::vector<std::string> abbreviations_;
};

enum class SectionRole { kBackgroundMethod, kResultConclusion };

// Case-insensitive prefix table from section headings to roles. The longest
// matching prefix wins; unknown headings go to background/method.
class SectionMap {
 public:
  static SectionMap Default();
  // TSV rows: prefix \t background_method|result_conclusion
  static SectionMap FromTsv(std::istream &in);

  SectionRole Route(std::string_view section_name) const;
  std::string ToTsv() const;

 private:
  std::vector<std::pair<std::string, SectionRole>> prefixes_;  // upper-case
};

using SentencePredicate = std::function<bool(std::string_view sentence)>;

ChunkedAbstract ChunkAbstract(const Document &doc,
                              const SentenceSegmenter &segmenter,
                              const SectionMap &sections,
                              const SentencePredicate &is_evidence);

}  // namespace ctrp

#endif  // CTRP_CORPUS_H_
