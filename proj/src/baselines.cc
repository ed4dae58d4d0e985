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

#include "ctrp/baselines.h"

#include <cmath>
#include <vector>

#include "ctrp/error.h"

namespace ctrp {

TrialResult MajorityLabel(std::span<const TrialResult> labels) {
  if (labels.empty()) throw ValidationError("majority of an empty label set");
  std::array<long, 3> counts{};
  for (TrialResult r : labels) ++counts[static_cast<int>(r)];
  TrialResult best = TrialResult::kNoDiff;
  for (TrialResult r : {TrialResult::kUp, TrialResult::kDown}) {
    if (counts[static_cast<int>(r)] > counts[static_cast<int>(best)]) best = r;
  }
  return best;
}

Metrics MajorityBaseline(std::span<const TrialResult> train,
                         std::span<const TrialResult> test) {
  const TrialResult label = MajorityLabel(train);
  std::vector<TrialResult> preds(test.size(), label);
  return ComputeMetrics(ConfusionMatrix::From(test, preds));
}

std::array<double, 3> LabelDistribution(std::span<const TrialResult> labels) {
  std::array<double, 3> dist{};
  if (labels.empty()) return dist;
  for (TrialResult r : labels) dist[static_cast<int>(r)] += 1.0;
  for (double &d : dist) d /= static_cast<double>(labels.size());
  return dist;
}

Metrics RandomBaselineExpected(const std::array<double, 3> &distribution) {
  double sum = 0.0;
  for (double p : distribution) {
    if (!(p >= 0.0)) throw ValidationError("negative class probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("class distribution does not sum to 1");
  }
  std::array<std::array<double, 3>, 3> expected{};
  for (int g = 0; g < 3; ++g) {
    for (int p = 0; p < 3; ++p) expected[g][p] = distribution[g] / 3.0;
  }
  return ComputeMetrics(expected);
}

}  // namespace ctrp
