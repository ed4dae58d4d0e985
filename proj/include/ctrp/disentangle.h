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

#ifndef CTRP_DISENTANGLE_H_
#define CTRP_DISENTANGLE_H_

#include <string>
#include <string_view>

#include "ctrp/error.h"
#include "ctrp/evidence.h"
#include "ctrp/labels.h"
#include "ctrp/lexicon.h"

namespace ctrp {

inline constexpr std::string_view kStatToken = "[STAT]";

// Reason codes carried by RecordRejected.
inline constexpr std::string_view kRejectInvalidMatch = "invalid_match";
inline constexpr std::string_view kRejectUnknownHead = "unknown_head";
inline constexpr std::string_view kRejectLabelNotInVocabulary =
    "label_not_in_vocabulary";
inline constexpr std::string_view kRejectDirectionMismatch =
    "direction_mismatch";

class RecordRejected : public Error {
 public:
  RecordRejected(std::string_view reason, const std::string &detail)
      : Error(ErrorKind::kValidation, std::string(reason) + ": " + detail),
        reason_(reason) {}

  std::string_view reason() const { return reason_; }

 private:
  std::string_view reason_;
};

struct Disentangled {
  std::string e_dis;   // sentence with one "[MASK]" per span
  std::string r_text;  // span texts joined by " ... "
  ComparativeLabel label;
};

// Masks the spans of `match` and maps its head to a label. Heads missing
// from the lexicon (or listed with the generic label) fall back to
// [MORE]/[LESS] by the match direction; an equality direction on such a head
// is indeterminable and the record is rejected.
Disentangled Disentangle(const ComparativeMatch &match, const Lexicon &lexicon,
                         const LabelVocabulary &vocab);

// Replaces p-value and confidence-interval expressions with "[STAT]".
// Idempotent.
std::string MaskFunctionalTokens(std::string_view text);

}  // namespace ctrp

#endif  // CTRP_DISENTANGLE_H_
