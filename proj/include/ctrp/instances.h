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

// Training instances for comparative-label pre-training and for trial result
// prediction, plus their raw JSONL forms.

#ifndef CTRP_INSTANCES_H_
#define CTRP_INSTANCES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ctrp/labels.h"

namespace ctrp {

// Outcome of intervention vs comparator. Ids are the class indices of the
// prediction head and the column order of prediction CSVs.
enum class TrialResult { kUp = 0, kNoDiff = 1, kDown = 2 };

inline constexpr int kNumResults = 3;
inline constexpr std::array<TrialResult, 3> kAllResults = {
    TrialResult::kUp, TrialResult::kNoDiff, TrialResult::kDown};

std::string_view ResultName(TrialResult r);  // "up", "nodiff", "down"
TrialResult ParseResult(std::string_view name);

inline TrialResult ReverseResult(TrialResult r) {
  if (r == TrialResult::kUp) return TrialResult::kDown;
  if (r == TrialResult::kDown) return TrialResult::kUp;
  return r;
}

inline TrialResult ResultOf(Direction d) {
  switch (d) {
    case Direction::kSup:
      return TrialResult::kUp;
    case Direction::kInf:
      return TrialResult::kDown;
    case Direction::kEq:
      break;
  }
  return TrialResult::kNoDiff;
}

struct PretrainInstance {
  std::string id;
  std::string background;
  std::string evidence;  // e_dis or its reversal; contains "[MASK]"
  ComparativeLabel label;
  bool adversarial = false;
  std::string source_id;  // record id the instance derives from
};

struct FinetuneInstance {
  std::string id;
  std::string background;
  std::optional<std::string> population;
  std::string intervention;
  std::string comparator;
  std::string outcome;
  TrialResult result = TrialResult::kNoDiff;
  bool adversarial = false;

  bool operator==(const FinetuneInstance &other) const = default;
};

std::string PretrainInstanceToJson(const PretrainInstance &inst);
PretrainInstance PretrainInstanceFromJson(std::string_view line,
                                          const LabelVocabulary &vocab);

// {"id","background","population"?,"intervention","comparator","outcome",
//  "result": "up"|"down"|"nodiff"}. Throws ValidationError when I, C or O
// is empty.
std::string FinetuneInstanceToJson(const FinetuneInstance &inst);
FinetuneInstance FinetuneInstanceFromJson(std::string_view line);

}  // namespace ctrp

#endif  // CTRP_INSTANCES_H_
