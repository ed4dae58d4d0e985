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

// Bag-of-words baseline: per-field TF-IDF vectors of background,
// population, intervention, comparator and outcome, concatenated, fed to
// multinomial logistic regression.
//
// Weighting: tf = raw count, idf = ln((1 + N) / (1 + df)) + 1 with N and df
// counted on the training instances of that field, each field block
// L2-normalized on its own. Words unseen in training are dropped.

#ifndef CTRP_BOW_H_
#define CTRP_BOW_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctrp/instances.h"
#include "ctrp/model.h"

namespace ctrp {

// Index-sorted (index, weight) pairs without explicit zeros.
struct SparseVector {
  std::vector<std::pair<int, double>> entries;

  bool empty() const { return entries.empty(); }
  double Get(int index) const;  // 0 when absent
};

enum class BowField { kBackground, kPopulation, kIntervention, kComparator,
                      kOutcome };
inline constexpr int kNumBowFields = 5;

// Lower-cased word tokens (pieces containing a letter or digit).
std::vector<std::string> BowTokens(std::string_view text);

class TfidfFeaturizer {
 public:
  static TfidfFeaturizer Fit(std::span<const FinetuneInstance> train);

  SparseVector Features(const FinetuneInstance &instance) const;

  int dim() const { return dim_; }
  // First index of each field's block; block k spans
  // [offset(k), offset(k) + field_size(k)).
  int offset(BowField field) const {
    return offsets_[static_cast<int>(field)];
  }
  int field_size(BowField field) const {
    return static_cast<int>(vocab_[static_cast<int>(field)].size());
  }
  double idf(BowField field, const std::string &token) const;  // 0 if unseen

 private:
  std::array<std::unordered_map<std::string, int>, kNumBowFields> vocab_;
  std::array<std::vector<double>, kNumBowFields> idf_;
  std::array<int, kNumBowFields> offsets_{};
  int dim_ = 0;
};

struct LogisticConfig {
  double l2 = 1e-4;
  int epochs = 300;
  double learning_rate = 1.0;
  uint64_t seed = 1;
};

// Softmax regression over the three results: logits = W x + b. The penalty
// (l2 / 2) * (|W|^2 + |b|^2) covers the bias too, so a huge l2 drives the
// model to uniform predictions.
class LogisticModel {
 public:
  LogisticModel(int dim, uint64_t seed);

  std::array<double, 3> Probabilities(const SparseVector &x) const;
  TrialResult Predict(const SparseVector &x) const;

  // Mean cross-entropy plus penalty. When the gradient pointers are
  // non-null they receive the gradient with the shapes of weights() and
  // bias().
  double Loss(std::span<const SparseVector> xs, std::span<const int> ys,
              double l2, RowMatrix<double> *grad_w,
              std::array<double, 3> *grad_b) const;

  int dim() const { return static_cast<int>(weights_.cols()); }
  RowMatrix<double> &weights() { return weights_; }  // [3 x dim]
  const RowMatrix<double> &weights() const { return weights_; }
  std::array<double, 3> &bias() { return bias_; }
  const std::array<double, 3> &bias() const { return bias_; }

 private:
  RowMatrix<double> weights_;
  std::array<double, 3> bias_{};
};

// Full-batch gradient descent. A step that would raise the loss is retried
// with half the learning rate, so the recorded losses never increase.
// Throws NumericError when the loss becomes non-finite.
LogisticModel TrainLogistic(std::span<const SparseVector> xs,
                            std::span<const int> ys, int dim,
                            const LogisticConfig &config,
                            std::vector<double> *loss_curve = nullptr);

}  // namespace ctrp

#endif  // CTRP_BOW_H_
