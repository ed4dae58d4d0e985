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

// Label-only baselines: the training majority class and the expected
// performance of uniform random guessing.

#ifndef CTRP_BASELINES_H_
#define CTRP_BASELINES_H_

#include <array>
#include <span>

#include "ctrp/instances.h"
#include "ctrp/metrics.h"

namespace ctrp {

// Most frequent label; ties go to nodiff, then up. Throws ValidationError
// for an empty span.
TrialResult MajorityLabel(std::span<const TrialResult> labels);

// Metrics of predicting MajorityLabel(train) for every test instance.
Metrics MajorityBaseline(std::span<const TrialResult> train,
                         std::span<const TrialResult> test);

// Class distribution of `labels`, indexed by TrialResult.
std::array<double, 3> LabelDistribution(std::span<const TrialResult> labels);

// Expected metrics of predicting each class with probability 1/3 on a test
// set with the given class distribution. Plug-in estimator: metrics of the
// expected confusion matrix pi_g / 3, so accuracy is exactly 1/3, precision
// of class k is pi_k, recall 1/3. Throws ValidationError unless the
// distribution is non-negative and sums to 1 (+-1e-9).
Metrics RandomBaselineExpected(const std::array<double, 3> &distribution);

}  // namespace ctrp

#endif  // CTRP_BASELINES_H_
