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

// Dataset assembly and encoding.
//
// Every model input has the layout
//
//   [CLS] background [SEP] evidence [SEP]
//
// with segment id 0 up to and including the first [SEP] and 1 afterwards.
// For pre-training the evidence is the masked sentence; for fine-tuning it
// is the trial elements in a configurable order joined by [SEP], by default
// intervention, outcome, comparator. Backgrounds keep their last 256 tokens,
// evidence its first 128.

#ifndef CTRP_DATASET_H_
#define CTRP_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrp/evidence.h"
#include "ctrp/instances.h"
#include "ctrp/labels.h"
#include "ctrp/tokenizer.h"

namespace ctrp {

inline constexpr int kMaxBackgroundTokens = 256;
inline constexpr int kMaxEvidenceTokens = 128;

struct EncodedInstance {
  std::string id;
  std::vector<int> token_ids;
  std::vector<int> segment_ids;
  int label_id = 0;
  bool adversarial = false;
};

std::string EncodedToJson(const EncodedInstance &inst);
EncodedInstance EncodedFromJson(std::string_view line);

enum class TrialElement { kPopulation, kIntervention, kComparator, kOutcome };

// "I,O,C" style; letters P, I, C, O. Throws ValidationError on unknown or
// repeated letters.
std::vector<TrialElement> ParseLayout(std::string_view spec);
std::string LayoutToString(const std::vector<TrialElement> &layout);

struct EncodeOptions {
  std::vector<TrialElement> layout = {TrialElement::kIntervention,
                                      TrialElement::kOutcome,
                                      TrialElement::kComparator};
  bool drop_background = false;
  int max_background = kMaxBackgroundTokens;
  int max_evidence = kMaxEvidenceTokens;
};

EncodedInstance Encode(const Tokenizer &tokenizer, const PretrainInstance &inst,
                       const LabelVocabulary &vocab,
                       const EncodeOptions &options = {});
EncodedInstance Encode(const Tokenizer &tokenizer, const FinetuneInstance &inst,
                       const EncodeOptions &options = {});

struct PretrainBuildOptions {
  // Fraction of records that also get an order-reversed counterpart; 0
  // disables adversarial pre-training.
  double adversarial_ratio = 1.0;
  uint64_t seed = 13;
  // Replace p-values and confidence intervals in the evidence with [STAT].
  bool scrub_statistics = true;
};

struct PretrainDataset {
  std::vector<PretrainInstance> instances;  // shuffled
  std::vector<size_t> histogram;            // indexed by label id
  uint64_t seed = 0;
};

PretrainDataset BuildPretrainDataset(
    std::span<const ImplicitEvidenceRecord> records,
    const LabelVocabulary &vocab, const PretrainBuildOptions &options);

// Splits records by document: a seeded fraction of documents is held out.
std::pair<std::vector<ImplicitEvidenceRecord>,
          std::vector<ImplicitEvidenceRecord>>
SplitByDocument(std::span<const ImplicitEvidenceRecord> records,
                double holdout_fraction, uint64_t seed);

// Originals followed by their intervention/comparator-swapped copies.
std::vector<FinetuneInstance> WithAdversarialCopies(
    std::span<const FinetuneInstance> instances);

}  // namespace ctrp

#endif  // CTRP_DATASET_H_
