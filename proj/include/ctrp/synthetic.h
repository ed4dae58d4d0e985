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

// Templated synthetic trial abstracts with known answers.
//
// A world fixes a set of invented drugs, controls and outcome families and
// a hidden effect table: every (drug class, outcome family) cell says
// whether the drug raises, lowers or does not change the outcome relative
// to a control. Abstracts report one comparative sentence consistent with
// the table, drawn from templates covering every pattern kind and all 34
// labels, surrounded by background, method, trap and conclusion sentences.
// Trial queries (intervention, comparator, outcome) draw from the same
// table, so a model that learned the abstracts has learned the trials.

#ifndef CTRP_SYNTHETIC_H_
#define CTRP_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctrp/corpus.h"
#include "ctrp/evidence.h"
#include "ctrp/instances.h"
#include "ctrp/labels.h"

namespace ctrp {

struct SyntheticConfig {
  uint64_t world_seed = 1;
  int drug_classes = 4;
  // Probability that the comparative sentence names the drug before the
  // control.
  double drug_first = 0.95;
  // Sampling weights over labels in vocabulary order. When empty,
  // superiority labels get `superiority_weight` and all others 1.
  std::vector<double> label_weights;
  double superiority_weight = 3.0;
  double named_sections = 0.5;
  double trap_rate = 0.5;
  double statistic_rate = 0.3;
  double modifier_rate = 0.3;
};

struct GoldEvidence {
  std::string doc_id;
  std::string background;  // expected background/method chunk
  std::string sentence;
  std::string label;
  PatternKind pattern = PatternKind::kErThan;
  std::vector<MaskSpan> spans;
};

std::string GoldToJson(const GoldEvidence &gold);

struct SyntheticCorpus {
  std::vector<Document> documents;
  std::vector<GoldEvidence> gold;  // one per document, same order
};

class SyntheticWorld {
 public:
  // Throws ValidationError for fewer than 3 drug classes or probabilities
  // outside [0, 1], or label weights of the wrong length.
  explicit SyntheticWorld(const SyntheticConfig &config);

  const SyntheticConfig &config() const { return config_; }
  const LabelVocabulary &vocab() const { return vocab_; }

  SyntheticCorpus GenerateCorpus(uint64_t seed, int n_docs) const;

  // Trial queries. With probability `swap_rate` the control is listed as
  // the intervention and the result reversed accordingly.
  std::vector<FinetuneInstance> GenerateTrials(uint64_t seed, int n,
                                               double swap_rate) const;

  // TSV term \t tree_number rows for drugs, controls and outcomes.
  std::string MeshTsv() const;

  // Effect of `drug` relative to any control on an outcome phrase.
  Direction Effect(const std::string &drug, const std::string &outcome) const;

  struct Family {
    std::string sup_label;
    std::string inf_label;
    std::vector<std::string> sup_words;
    std::vector<std::string> inf_words;
    std::vector<std::string> outcomes;
    enum class Kind { kPlain, kIor, kMoreLess } kind = Kind::kPlain;
  };

 private:
  SyntheticConfig config_;
  LabelVocabulary vocab_;
  std::vector<Family> families_;
  std::vector<std::string> drugs_;
  std::vector<int> drug_class_;
  std::vector<std::vector<Direction>> effect_;  // [class][family]
  std::vector<double> label_weights_;
};

// Convenience wrapper used by the command line and tests.
SyntheticCorpus GenerateSyntheticCorpus(uint64_t seed, int n_docs,
                                        const SyntheticConfig &config);

}  // namespace ctrp

#endif  // CTRP_SYNTHETIC_H_
