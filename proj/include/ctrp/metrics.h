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

// Classification metrics over the three trial results, the robustness
// measure |delta| and the opposite-prediction permutation test.

#ifndef CTRP_METRICS_H_
#define CTRP_METRICS_H_

#include <array>
#include <cstdint>
#include <span>

#include "ctrp/instances.h"

namespace ctrp {

// Counts indexed [gold][pred] by TrialResult.
struct ConfusionMatrix {
  std::array<std::array<long, 3>, 3> counts{};

  void Add(TrialResult gold, TrialResult pred) {
    ++counts[static_cast<int>(gold)][static_cast<int>(pred)];
  }
  long total() const;

  // Throws ValidationError when the spans differ in length.
  static ConfusionMatrix From(std::span<const TrialResult> golds,
                              std::span<const TrialResult> preds);
};

struct Metrics {
  double accuracy = 0.0;
  std::array<double, 3> precision{};
  std::array<double, 3> recall{};
  std::array<double, 3> f1{};
  double macro_f1_3way = 0.0;
  double macro_f1_2way = 0.0;  // mean of F1(up) and F1(down)
  double n = 0.0;
};

// Per-class F1 = 2PR/(P+R), with every 0/0 taken as 0. Throws
// ValidationError for an empty matrix.
Metrics ComputeMetrics(const ConfusionMatrix &conf);
// Same on real-valued (expected) counts.
Metrics ComputeMetrics(const std::array<std::array<double, 3>, 3> &counts);

// |standard - adversarial| / standard * 100. Throws ValidationError when
// standard <= 0.
double RobustnessDelta(double standard_accuracy, double adversarial_accuracy);

struct OppositeTestResult {
  bool defined = false;  // false when there are no errors
  long errors = 0;
  long opposite = 0;  // gold up & pred down, or gold down & pred up
  double share = 0.0;
  double p_value = 0.0;
  int permutations = 0;
};

// Null distribution: the multiset of predictions permuted uniformly across
// instances, golds held fixed; one-sided p = fraction of permutations whose
// opposite share among errors is <= the observed share. Permutations
// without errors count as share 0. Permutation i draws from a generator
// seeded by (seed, i). Throws ValidationError for n_perm < 1000 or
// mismatched lengths.
OppositeTestResult OppositeRateTest(std::span<const TrialResult> golds,
                                    std::span<const TrialResult> preds,
                                    int n_perm, uint64_t seed);

}  // namespace ctrp

#endif  // CTRP_METRICS_H_
