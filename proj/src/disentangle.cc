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

#include "ctrp/disentangle.h"

#include <regex>

namespace ctrp {
namespace {

void CheckSpans(const ComparativeMatch &match) {
  if (match.spans.empty()) {
    throw RecordRejected(kRejectInvalidMatch, "match without spans");
  }
  size_t previous_end = 0;
  for (const MaskSpan &s : match.spans) {
    if (s.begin >= s.end || s.begin < previous_end ||
        s.end > match.sentence.size()) {
      throw RecordRejected(kRejectInvalidMatch,
                           "spans out of order or out of bounds");
    }
    previous_end = s.end;
  }
}

ComparativeLabel GenericLabel(const ComparativeMatch &match,
                              const LabelVocabulary &vocab) {
  if (match.direction == Direction::kEq) {
    throw RecordRejected(kRejectUnknownHead,
                         "head \"" + match.head +
                             "\" has no label and no polarity");
  }
  const char *name = match.direction == Direction::kSup ? "[MORE]" : "[LESS]";
  if (vocab.Find(name) < 0) {
    throw RecordRejected(kRejectLabelNotInVocabulary, name);
  }
  return vocab.Get(name);
}

ComparativeLabel LabelFor(const ComparativeMatch &match, const Lexicon &lexicon,
                          const LabelVocabulary &vocab) {
  std::string name;
  switch (match.pattern) {
    case PatternKind::kMoreThan:
      name = "[MORE]";
      break;
    case PatternKind::kLessThan:
      name = "[LESS]";
      break;
    case PatternKind::kSimilarTo:
      name = "[SIMILAR]";
      break;
    case PatternKind::kNoDiffBetweenAnd:
      name = "[NODIFF]";
      break;
    case PatternKind::kErThan: {
      const LexiconEntry *entry = lexicon.Find(match.head);
      if (entry == nullptr || entry->label == kGenericLabel) {
        return GenericLabel(match, vocab);
      }
      name = entry->label;
      break;
    }
  }
  if (vocab.Find(name) < 0) {
    throw RecordRejected(kRejectLabelNotInVocabulary, name);
  }
  return vocab.Get(name);
}

}  // namespace

Disentangled Disentangle(const ComparativeMatch &match, const Lexicon &lexicon,
                         const LabelVocabulary &vocab) {
  CheckSpans(match);
  Disentangled out;
  out.label = LabelFor(match, lexicon, vocab);
  const std::string &s = match.sentence;
  size_t cursor = 0;
  std::vector<std::string> pieces;
  for (const MaskSpan &span : match.spans) {
    out.e_dis.append(s, cursor, span.begin - cursor);
    out.e_dis.append(kMaskToken);
    pieces.push_back(s.substr(span.begin, span.end - span.begin));
    cursor = span.end;
  }
  out.e_dis.append(s, cursor);
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out.r_text += " ... ";
    out.r_text += pieces[i];
  }
  return out;
}

std::string MaskFunctionalTokens(std::string_view text) {
  // Numbers: "0.05", ".001", "1", "3.2e-4".
  static const std::string kNum = R"((?:\d+(?:\.\d+)?|\.\d+)(?:[eE]-?\d+)?)";
  static const std::string kRangeSep = R"(\s*(?:-|–|—|to|,)\s*)";
  static const std::regex kPValue(
      R"(\b[Pp]\b(?:\s*-?\s*values?)?\s*)"
      R"((?:(?:of|was|were|is)\s*(?:[<>]=?|=|≤|≥)?|[<>]=?|=|≤|≥)\s*)" +
      kNum);
  static const std::regex kConfidenceInterval(
      R"(\b\d{2}(?:\.\d+)?\s*%\s*(?:CI|C\.I\.|confidence intervals?)\s*[:,=]?\s*)"
      R"((?:\(\s*-?)" + kNum + kRangeSep + "-?" + kNum + R"(\s*\))" +
      R"(|\[\s*-?)" + kNum + kRangeSep + "-?" + kNum + R"(\s*\])" +
      R"(|-?)" + kNum + kRangeSep + "-?" + kNum + ")");
  std::string out = std::regex_replace(std::string(text), kConfidenceInterval,
                                       std::string(kStatToken));
  return std::regex_replace(out, kPValue, std::string(kStatToken));
}

}  // namespace ctrp
