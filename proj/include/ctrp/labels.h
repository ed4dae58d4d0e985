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

// Fine-grained comparative labels ("[HIGHER]", "[NODIFF]", ...) and the
// antonym map between them.
//
// A vocabulary has exactly 34 labels. Every label carries the direction of
// the comparison it names (superiority, equality, inferiority) and the
// antonym map is a total involution that flips that direction. The two
// equality labels [NODIFF] and [SIMILAR] are its only fixed points.

#ifndef CTRP_LABELS_H_
#define CTRP_LABELS_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctrp {

enum class Direction { kSup = 0, kEq = 1, kInf = 2 };

inline Direction Flip(Direction d) {
  switch (d) {
    case Direction::kSup:
      return Direction::kInf;
    case Direction::kInf:
      return Direction::kSup;
    case Direction::kEq:
      break;
  }
  return Direction::kEq;
}

std::string_view DirectionName(Direction d);  // "SUP", "EQ", "INF"
Direction ParseDirection(std::string_view name);

struct ComparativeLabel {
  std::string name;
  Direction direction = Direction::kEq;

  bool operator==(const ComparativeLabel &other) const = default;
};

class LabelVocabulary {
 public:
  static constexpr size_t kSize = 34;

  struct Row {
    std::string label;
    std::string antonym;
    Direction direction;
  };

  // Validates the rows and throws ValidationError on any inconsistency:
  // wrong cardinality, duplicate or malformed names, dangling or
  // non-involutive antonyms, direction not flipped by the antonym, or a
  // fixed-point count other than two.
  explicit LabelVocabulary(const std::vector<Row> &rows);

  static const LabelVocabulary &Default();
  static const char *DefaultTsv();
  // TSV rows: label \t antonym \t direction
  static LabelVocabulary FromTsv(std::istream &in);
  std::string ToTsv() const;

  size_t size() const { return labels_.size(); }
  const ComparativeLabel &label(int id) const { return labels_.at(id); }
  const std::vector<ComparativeLabel> &labels() const { return labels_; }

  // -1 when absent.
  int Find(std::string_view name) const;
  // Throws ValidationError when absent.
  int IdOf(std::string_view name) const;
  const ComparativeLabel &Get(std::string_view name) const {
    return labels_[IdOf(name)];
  }

  int AntonymId(int id) const { return antonym_.at(id); }

 private:
  std::vector<ComparativeLabel> labels_;
  std::vector<int> antonym_;
  std::unordered_map<std::string, int> index_;
};

// Antonym of `label`. Throws ValidationError if the label is not in `vocab`
// or its direction disagrees with the vocabulary entry.
ComparativeLabel Rev(const ComparativeLabel &label,
                     const LabelVocabulary &vocab);

}  // namespace ctrp

#endif  // CTRP_LABELS_H_
