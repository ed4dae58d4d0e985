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

#include "ctrp/labels.h"

#include <sstream>

#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kSup:
      return "SUP";
    case Direction::kEq:
      return "EQ";
    case Direction::kInf:
      return "INF";
  }
  return "?";
}

Direction ParseDirection(std::string_view name) {
  if (name == "SUP") return Direction::kSup;
  if (name == "EQ") return Direction::kEq;
  if (name == "INF") return Direction::kInf;
  throw ValidationError("unknown direction \"" + std::string(name) + "\"");
}

namespace {

bool WellFormedLabel(std::string_view name) {
  if (name.size() < 3 || name.front() != '[' || name.back() != ']') {
    return false;
  }
  for (char c : name.substr(1, name.size() - 2)) {
    if (!IsAsciiUpper(c) && c != '_') return false;
  }
  return true;
}

}  // namespace

LabelVocabulary::LabelVocabulary(const std::vector<Row> &rows) {
  if (rows.size() != kSize) {
    throw ValidationError("label vocabulary must have " +
                          std::to_string(kSize) + " labels, got " +
                          std::to_string(rows.size()));
  }
  for (const Row &row : rows) {
    if (!WellFormedLabel(row.label)) {
      throw ValidationError("malformed label \"" + row.label + "\"");
    }
    if (!index_.emplace(row.label, static_cast<int>(labels_.size())).second) {
      throw ValidationError("duplicate label " + row.label);
    }
    labels_.push_back({row.label, row.direction});
  }
  int fixed_points = 0;
  for (const Row &row : rows) {
    auto it = index_.find(row.antonym);
    if (it == index_.end()) {
      throw ValidationError("antonym " + row.antonym + " of " + row.label +
                            " is not a label");
    }
    antonym_.push_back(it->second);
  }
  for (size_t id = 0; id < labels_.size(); ++id) {
    const int other = antonym_[id];
    if (antonym_[other] != static_cast<int>(id)) {
      throw ValidationError("antonym map is not an involution at " +
                            labels_[id].name);
    }
    if (labels_[other].direction != Flip(labels_[id].direction)) {
      throw ValidationError("antonym of " + labels_[id].name +
                            " does not flip its direction");
    }
    if (other == static_cast<int>(id)) ++fixed_points;
  }
  if (fixed_points != 2) {
    throw ValidationError("expected exactly 2 self-antonym labels, got " +
                          std::to_string(fixed_points));
  }
}

const char *LabelVocabulary::DefaultTsv() {
  return "[HIGHER]\t[LOWER]\tSUP\n"
         "[LOWER]\t[HIGHER]\tINF\n"
         "[GREATER]\t[SMALLER]\tSUP\n"
         "[SMALLER]\t[GREATER]\tINF\n"
         "[MORE]\t[LESS]\tSUP\n"
         "[LESS]\t[MORE]\tINF\n"
         "[BETTER]\t[POORER]\tSUP\n"
         "[POORER]\t[BETTER]\tINF\n"
         "[LONGER]\t[SHORTER]\tSUP\n"
         "[SHORTER]\t[LONGER]\tINF\n"
         "[FASTER]\t[SLOWER]\tSUP\n"
         "[SLOWER]\t[FASTER]\tINF\n"
         "[STRONGER]\t[WEAKER]\tSUP\n"
         "[WEAKER]\t[STRONGER]\tINF\n"
         "[LATER]\t[EARLIER]\tSUP\n"
         "[EARLIER]\t[LATER]\tINF\n"
         "[OLDER]\t[YOUNGER]\tSUP\n"
         "[YOUNGER]\t[OLDER]\tINF\n"
         "[HEAVIER]\t[LIGHTER]\tSUP\n"
         "[LIGHTER]\t[HEAVIER]\tINF\n"
         "[WIDER]\t[NARROWER]\tSUP\n"
         "[NARROWER]\t[WIDER]\tINF\n"
         "[THICKER]\t[THINNER]\tSUP\n"
         "[THINNER]\t[THICKER]\tINF\n"
         "[DEEPER]\t[SHALLOWER]\tSUP\n"
         "[SHALLOWER]\t[DEEPER]\tINF\n"
         "[SUPERIOR]\t[INFERIOR]\tSUP\n"
         "[INFERIOR]\t[SUPERIOR]\tINF\n"
         "[SAFER]\t[RISKIER]\tSUP\n"
         "[RISKIER]\t[SAFER]\tINF\n"
         "[LARGER]\t[LESSER]\tSUP\n"
         "[LESSER]\t[LARGER]\tINF\n"
         "[NODIFF]\t[NODIFF]\tEQ\n"
         "[SIMILAR]\t[SIMILAR]\tEQ\n";
}

const LabelVocabulary &LabelVocabulary::Default() {
  static const LabelVocabulary *vocab = [] {
    std::istringstream in(DefaultTsv());
    return new LabelVocabulary(FromTsv(in));
  }();
  return *vocab;
}

LabelVocabulary LabelVocabulary::FromTsv(std::istream &in) {
  std::vector<Row> rows;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty() || Trim(line).front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw ValidationError("label vocabulary line " +
                            std::to_string(line_number) +
                            ": expected 3 tab-separated fields");
    }
    rows.push_back({std::string(Trim(fields[0])), std::string(Trim(fields[1])),
                    ParseDirection(Trim(fields[2]))});
  }
  return LabelVocabulary(rows);
}

std::string LabelVocabulary::ToTsv() const {
  std::string out;
  for (size_t id = 0; id < labels_.size(); ++id) {
    out += labels_[id].name + "\t" + labels_[antonym_[id]].name + "\t" +
           std::string(DirectionName(labels_[id].direction)) + "\n";
  }
  return out;
}

int LabelVocabulary::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

int LabelVocabulary::IdOf(std::string_view name) const {
  int id = Find(name);
  if (id < 0) {
    throw ValidationError("unknown label \"" + std::string(name) + "\"");
  }
  return id;
}

ComparativeLabel Rev(const ComparativeLabel &label,
                     const LabelVocabulary &vocab) {
  const int id = vocab.IdOf(label.name);
  if (vocab.label(id).direction != label.direction) {
    throw ValidationError("label " + label.name +
                          " carries a direction that disagrees with the "
                          "vocabulary");
  }
  return vocab.label(vocab.AntonymId(id));
}

}  // namespace ctrp
