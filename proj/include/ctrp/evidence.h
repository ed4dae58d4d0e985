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

// Data types shared by the comparative-sentence miner, the disentangler and
// the adversarial generator.

#ifndef CTRP_EVIDENCE_H_
#define CTRP_EVIDENCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "ctrp/labels.h"

namespace ctrp {

// The placeholder substituted for every masked span.
inline constexpr std::string_view kMaskToken = "[MASK]";

enum class PatternKind {
  kMoreThan,
  kLessThan,
  kErThan,
  kSimilarTo,
  kNoDiffBetweenAnd,
};

std::string_view PatternName(PatternKind kind);
PatternKind ParsePattern(std::string_view name);

enum class SpanKind { kComparativePhrase, kConnective };

std::string_view SpanKindName(SpanKind kind);
SpanKind ParseSpanKind(std::string_view name);

struct MaskSpan {
  size_t begin = 0;  // byte offsets into the sentence
  size_t end = 0;
  SpanKind kind = SpanKind::kComparativePhrase;

  bool operator==(const MaskSpan &other) const = default;
};

struct ComparativeMatch {
  std::string sentence;
  PatternKind pattern = PatternKind::kErThan;
  Direction direction = Direction::kEq;
  std::vector<MaskSpan> spans;  // ascending, non-overlapping
  std::string head;             // lower-case head word, e.g. "higher"
};

struct ImplicitEvidenceRecord {
  std::string id;  // "<doc_id>:<ordinal>"
  std::string doc_id;
  std::string background;
  std::string e_ent;
  std::string e_dis;
  std::string r_text;
  ComparativeLabel label;
  PatternKind pattern = PatternKind::kErThan;
  std::vector<MaskSpan> spans;
};

std::string RecordToJson(const ImplicitEvidenceRecord &record);
// Throws ValidationError on malformed lines or labels outside `vocab`.
ImplicitEvidenceRecord RecordFromJson(std::string_view line,
                                      const LabelVocabulary &vocab);

// Counts "[MASK]" occurrences.
size_t CountPlaceholders(std::string_view text);

// Substitutes span texts of `e_ent` back into the placeholders of `e_dis`.
// Returns the reconstructed sentence; it equals e_ent for valid records.
std::string RestorePlaceholders(std::string_view e_dis, std::string_view e_ent,
                                const std::vector<MaskSpan> &spans);

}  // namespace ctrp

#endif  // CTRP_EVIDENCE_H_
