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

// Ontology nearest-neighbor baseline.
//
// Intervention, comparator and outcome texts are mapped to controlled
// vocabulary terms; each term carries one or more tree numbers
// ("C02.081.343"). The distance between two trials sums, over the three
// elements, the smallest tree distance between any of their tree numbers.
// A test trial takes the majority label of all training trials at the
// minimum distance.

#ifndef CTRP_MESH_H_
#define CTRP_MESH_H_

#include <array>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctrp/instances.h"

namespace ctrp {

// Dot-separated, nonempty alphanumeric segments.
bool IsWellFormedTreeNumber(std::string_view tree);

// Edges between two nodes: (depth(a) - lcp) + (depth(b) - lcp) where lcp
// counts shared leading segments. Nodes in different top-level trees are
// joined through a virtual root, adding `bridge`. Throws ValidationError
// for malformed tree numbers.
int TreeDist(std::string_view a, std::string_view b, int bridge = 0);

class MeshIndex {
 public:
  // Throws ValidationError for malformed tree numbers or empty terms.
  void Add(std::string_view term, std::string_view tree_number);

  // TSV rows: term \t tree_number. Blank lines and '#' comments skipped.
  static MeshIndex FromTsv(std::istream &in);

  // Terms found in `text`: scanning left to right, at each word start the
  // longest term matching case-insensitively on word boundaries is taken
  // and scanning resumes after it. Returns lower-cased terms in text order.
  std::vector<std::string> Match(std::string_view text) const;

  // Tree numbers of a lower-cased term; empty when unknown.
  const std::vector<std::string> &TreeNumbers(const std::string &term) const;

  size_t size() const { return trees_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> trees_;  // term -> trees
  // First word of each term -> terms starting with it, longest first.
  std::map<std::string, std::vector<std::string>> by_first_word_;
};

struct MeshConfig {
  int no_match_penalty = 100;
  int bridge = 0;
};

// Tree numbers matched in the intervention, comparator and outcome.
struct MeshProfile {
  std::array<std::vector<std::string>, 3> trees;
  bool any_match() const;
};

MeshProfile Profile(const FinetuneInstance &inst, const MeshIndex &index);

// Sum over elements of the minimum pairwise TreeDist; an element without
// matches on either side contributes the penalty.
int MeshDistance(const MeshProfile &a, const MeshProfile &b,
                 const MeshConfig &config);

struct MeshPrediction {
  TrialResult label = TrialResult::kNoDiff;
  int distance = 0;
  int neighbors = 0;     // training trials at the minimum distance
  bool fallback = false;  // no matches at all: majority label used
};

class MeshNearestNeighbor {
 public:
  // Throws ValidationError for an empty training set.
  MeshNearestNeighbor(std::span<const FinetuneInstance> train,
                      const MeshIndex &index, MeshConfig config = {});

  MeshPrediction Predict(const FinetuneInstance &test) const;

 private:
  const MeshIndex &index_;
  MeshConfig config_;
  std::vector<MeshProfile> profiles_;
  std::vector<TrialResult> labels_;
  TrialResult majority_;
};

}  // namespace ctrp

#endif  // CTRP_MESH_H_
