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

#include "ctrp/metrics.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ctrp/error.h"

namespace ctrp {
namespace {

double SafeDiv(double a, double b) { return b == 0.0 ? 0.0 : a / b; }

bool IsOpposite(TrialResult gold, TrialResult pred) {
  return (gold == TrialResult::kUp && pred == TrialResult::kDown) ||
         (gold == TrialResult::kDown && pred == TrialResult::kUp);
}

}  // namespace

long ConfusionMatrix::total() const {
  long n = 0;
  for (const auto &row : counts) {
    for (long c : row) n += c;
  }
  return n;
}

ConfusionMatrix ConfusionMatrix::From(std::span<const TrialResult> golds,
                                      std::span<const TrialResult> preds) {
  if (golds.size() != preds.size()) {
    throw ValidationError("gold and prediction counts differ");
  }
  ConfusionMatrix conf;
  for (size_t i = 0; i < golds.size(); ++i) conf.Add(golds[i], preds[i]);
  return conf;
}

Metrics ComputeMetrics(const std::array<std::array<double, 3>, 3> &counts) {
  Metrics m;
  double trace = 0.0;
  for (int g = 0; g < 3; ++g) {
    for (int p = 0; p < 3; ++p) {
      if (!(counts[g][p] >= 0.0)) {
        throw ValidationError("confusion counts must be non-negative");
      }
      m.n += counts[g][p];
    }
    trace += counts[g][g];
  }
  if (m.n <= 0.0) throw ValidationError("empty confusion matrix");
  m.accuracy = trace / m.n;
  for (int k = 0; k < 3; ++k) {
    double predicted = 0.0, actual = 0.0;
    for (int j = 0; j < 3; ++j) {
      predicted += counts[j][k];
      actual += counts[k][j];
    }
    m.precision[k] = SafeDiv(counts[k][k], predicted);
    m.recall[k] = SafeDiv(counts[k][k], actual);
    m.f1[k] = SafeDiv(2.0 * m.precision[k] * m.recall[k],
                      m.precision[k] + m.recall[k]);
  }
  m.macro_f1_3way = (m.f1[0] + m.f1[1] + m.f1[2]) / 3.0;
  m.macro_f1_2way = (m.f1[static_cast<int>(TrialResult::kUp)] +
                     m.f1[static_cast<int>(TrialResult::kDown)]) /
                    2.0;
  return m;
}

Metrics ComputeMetrics(const ConfusionMatrix &conf) {
  std::array<std::array<double, 3>, 3> counts{};
  for (int g = 0; g < 3; ++g) {
    for (int p = 0; p < 3; ++p) {
      counts[g][p] = static_cast<double>(conf.counts[g][p]);
    }
  }
  return ComputeMetrics(counts);
}

double RobustnessDelta(double standard_accuracy, double adversarial_accuracy) {
  if (!(standard_accuracy > 0.0)) {
    throw ValidationError("standard accuracy must be positive");
  }
  return std::abs(standard_accuracy - adversarial_accuracy) /
         standard_accuracy * 100.0;
}

OppositeTestResult OppositeRateTest(std::span<const TrialResult> golds,
                                    std::span<const TrialResult> preds,
                                    int n_perm, uint64_t seed) {
  if (golds.size() != preds.size()) {
    throw ValidationError("gold and prediction counts differ");
  }
  if (n_perm < 1000) {
    throw ValidationError("the permutation test needs at least 1000 "
                          "permutations");
  }
  OppositeTestResult result;
  result.permutations = n_perm;
  for (size_t i = 0; i < golds.size(); ++i) {
    if (golds[i] == preds[i]) continue;
    ++result.errors;
    if (IsOpposite(golds[i], preds[i])) ++result.opposite;
  }
  if (result.errors == 0) return result;
  result.defined = true;
  result.share = static_cast<double>(result.opposite) / result.errors;

  std::vector<TrialResult> shuffled(preds.begin(), preds.end());
  long at_most = 0;
  for (int i = 0; i < n_perm; ++i) {
    std::seed_seq seq{static_cast<uint32_t>(seed),
                      static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::copy(preds.begin(), preds.end(), shuffled.begin());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    long errors = 0, opposite = 0;
    for (size_t j = 0; j < golds.size(); ++j) {
      if (golds[j] == shuffled[j]) continue;
      ++errors;
      if (IsOpposite(golds[j], shuffled[j])) ++opposite;
    }
    // Compare opposite/errors <= share without rounding:
    // opposite * observed_errors <= observed_opposite * errors.
    if (opposite * result.errors <= result.opposite * errors) ++at_most;
  }
  result.p_value = static_cast<double>(at_most) / n_perm;
  return result;
}

}  // namespace ctrp
