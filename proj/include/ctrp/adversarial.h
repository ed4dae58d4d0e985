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

// Order-reversed counterparts of training instances.
//
// A masked sentence "s0 [MASK] s1 ... [MASK] sk." is rewritten as
// "sk [MASK] ... s1 [MASK] s0." with the word order inside each segment
// kept. Reversing which side of the comparison comes first reverses the
// comparison, so the label becomes its antonym. For trial-level instances
// the intervention and comparator swap and up/down exchange.

#ifndef CTRP_ADVERSARIAL_H_
#define CTRP_ADVERSARIAL_H_

#include <string>
#include <string_view>

#include "ctrp/evidence.h"
#include "ctrp/instances.h"
#include "ctrp/labels.h"

namespace ctrp {

// Segment reversal with case normalization: the promoted segment's first
// letter is upper-cased and the demoted first segment's first letter is
// lower-cased, except when the leading word has two or more capitals
// (acronym guard). A trailing ./!/? stays terminal. Throws ValidationError
// if the text has no placeholder.
std::string ReverseEvidence(std::string_view e_dis);

// The fixed point form of ReverseEvidence(ReverseEvidence(x)): same segment
// order, first segment capitalized, last segment lower-cased, whitespace
// collapsed around placeholders.
std::string NormalizeEvidenceCase(std::string_view e_dis);

// Placeholder-delimited segments, trimmed, without the terminal mark.
std::vector<std::string> EvidenceSegments(std::string_view e_dis);

struct AdversarialEvidence {
  std::string e_rev;
  ComparativeLabel label;
  std::string source_id;
};

AdversarialEvidence MakeAdversarialPretrain(
    const ImplicitEvidenceRecord &record, const LabelVocabulary &vocab);

// Swaps intervention and comparator and reverses up/down. An involution:
// the adversarial flag and the "/adv" id suffix toggle.
FinetuneInstance MakeAdversarialFinetune(const FinetuneInstance &instance);

}  // namespace ctrp

#endif  // CTRP_ADVERSARIAL_H_
