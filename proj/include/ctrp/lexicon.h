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

#ifndef CTRP_LEXICON_H_
#define CTRP_LEXICON_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctrp/labels.h"

namespace ctrp {

// Label value meaning "no specific label": the head maps to [MORE] or
// [LESS] according to its direction.
inline constexpr std::string_view kGenericLabel = "*";

struct LexiconEntry {
  std::string surface;  // lower-case
  std::string lemma;
  Direction direction = Direction::kSup;
  std::string label;  // e.g. "[HIGHER]", or kGenericLabel
};

// Comparative heads recognized by the "-er ... than" pattern, plus the
// degree modifiers that may precede a head. Only listed surface forms are
// treated as comparatives, so words such as "other", "whether" or "after"
// never start a match.
class Lexicon {
 public:
  Lexicon(std::vector<LexiconEntry> entries,
          std::vector<std::string> modifiers);

  static const Lexicon &Default();
  static const char *DefaultTsv();
  static const std::vector<std::string> &DefaultModifiers();

  // TSV rows: surface_form \t lemma \t direction \t label
  // Heads must be SUP or INF.
  static Lexicon FromTsv(std::istream &in,
                         std::vector<std::string> modifiers =
                             DefaultModifiers());
  std::string ToTsv() const;

  // Lookup by lower-case surface form; nullptr when absent.
  const LexiconEntry *Find(std::string_view surface) const;
  bool IsModifier(std::string_view word) const;

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  const std::vector<std::string> &modifiers() const { return modifiers_; }

  // Throws ValidationError if a specific label is missing from `vocab` or
  // its direction disagrees with the entry.
  void CheckAgainst(const LabelVocabulary &vocab) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::vector<std::string> modifiers_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace ctrp

#endif  // CTRP_LEXICON_H_
