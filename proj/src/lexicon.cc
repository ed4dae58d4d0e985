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

#include "ctrp/lexicon.h"

#include <algorithm>
#include <sstream>

#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {

Lexicon::Lexicon(std::vector<LexiconEntry> entries,
                 std::vector<std::string> modifiers)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    LexiconEntry &e = entries_[i];
    e.surface = ToLower(Trim(e.surface));
    if (e.surface.empty()) throw ValidationError("empty lexicon surface form");
    if (e.direction == Direction::kEq) {
      throw ValidationError("lexicon head \"" + e.surface +
                            "\" must be SUP or INF");
    }
    if (!index_.emplace(e.surface, i).second) {
      throw ValidationError("duplicate lexicon entry \"" + e.surface + "\"");
    }
  }
  for (const std::string &m : modifiers) modifiers_.push_back(ToLower(Trim(m)));
}

const char *Lexicon::DefaultTsv() {
  return "higher\thigh\tSUP\t[HIGHER]\n"
         "lower\tlow\tINF\t[LOWER]\n"
         "greater\tgreat\tSUP\t[GREATER]\n"
         "smaller\tsmall\tINF\t[SMALLER]\n"
         "fewer\tfew\tINF\t[LESS]\n"
         "better\tgood\tSUP\t[BETTER]\n"
         "poorer\tpoor\tINF\t[POORER]\n"
         "worse\tbad\tINF\t[POORER]\n"
         "longer\tlong\tSUP\t[LONGER]\n"
         "shorter\tshort\tINF\t[SHORTER]\n"
         "faster\tfast\tSUP\t[FASTER]\n"
         "quicker\tquick\tSUP\t[FASTER]\n"
         "slower\tslow\tINF\t[SLOWER]\n"
         "stronger\tstrong\tSUP\t[STRONGER]\n"
         "weaker\tweak\tINF\t[WEAKER]\n"
         "later\tlate\tSUP\t[LATER]\n"
         "earlier\tearly\tINF\t[EARLIER]\n"
         "older\told\tSUP\t[OLDER]\n"
         "younger\tyoung\tINF\t[YOUNGER]\n"
         "heavier\theavy\tSUP\t[HEAVIER]\n"
         "lighter\tlight\tINF\t[LIGHTER]\n"
         "wider\twide\tSUP\t[WIDER]\n"
         "broader\tbroad\tSUP\t[WIDER]\n"
         "narrower\tnarrow\tINF\t[NARROWER]\n"
         "thicker\tthick\tSUP\t[THICKER]\n"
         "thinner\tthin\tINF\t[THINNER]\n"
         "deeper\tdeep\tSUP\t[DEEPER]\n"
         "shallower\tshallow\tINF\t[SHALLOWER]\n"
         "superior\tsuperior\tSUP\t[SUPERIOR]\n"
         "inferior\tinferior\tINF\t[INFERIOR]\n"
         "safer\tsafe\tSUP\t[SAFER]\n"
         "riskier\trisky\tINF\t[RISKIER]\n"
         "larger\tlarge\tSUP\t[LARGER]\n"
         "bigger\tbig\tSUP\t[LARGER]\n"
         "lesser\tless\tINF\t[LESSER]\n"
         "steeper\tsteep\tSUP\t*\n"
         "milder\tmild\tINF\t*\n";
}

const std::vector<std::string> &Lexicon::DefaultModifiers() {
  static const std::vector<std::string> kModifiers = {
      "slightly", "significantly", "markedly", "much", "far"};
  return kModifiers;
}

const Lexicon &Lexicon::Default() {
  static const Lexicon *lexicon = [] {
    std::istringstream in(DefaultTsv());
    return new Lexicon(FromTsv(in));
  }();
  return *lexicon;
}

Lexicon Lexicon::FromTsv(std::istream &in, std::vector<std::string> modifiers) {
  std::vector<LexiconEntry> entries;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty() || Trim(line).front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 4) {
      throw ValidationError("lexicon line " + std::to_string(line_number) +
                            ": expected 4 tab-separated fields");
    }
    entries.push_back({std::string(Trim(fields[0])),
                       std::string(Trim(fields[1])),
                       ParseDirection(Trim(fields[2])),
                       std::string(Trim(fields[3]))});
  }
  return Lexicon(std::move(entries), std::move(modifiers));
}

std::string Lexicon::ToTsv() const {
  std::string out;
  for (const LexiconEntry &e : entries_) {
    out += e.surface + "\t" + e.lemma + "\t" +
           std::string(DirectionName(e.direction)) + "\t" + e.label + "\n";
  }
  return out;
}

const LexiconEntry *Lexicon::Find(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

bool Lexicon::IsModifier(std::string_view word) const {
  return std::find(modifiers_.begin(), modifiers_.end(), word) !=
         modifiers_.end();
}

void Lexicon::CheckAgainst(const LabelVocabulary &vocab) const {
  for (const LexiconEntry &e : entries_) {
    if (e.label == kGenericLabel) continue;
    const ComparativeLabel &label = vocab.Get(e.label);
    if (label.direction != e.direction) {
      throw ValidationError("lexicon entry \"" + e.surface + "\" is " +
                            std::string(DirectionName(e.direction)) +
                            " but label " + e.label + " is " +
                            std::string(DirectionName(label.direction)));
    }
  }
}

}  // namespace ctrp
