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

#include "ctrp/bow.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "ctrp/error.h"
#include "ctrp/text.h"
#include "ctrp/tokenizer.h"

namespace ctrp {
namespace {

const std::string *FieldText(const FinetuneInstance &inst, int field) {
  switch (static_cast<BowField>(field)) {
    case BowField::kBackground:
      return &inst.background;
    case BowField::kPopulation:
      return inst.population ? &*inst.population : nullptr;
    case BowField::kIntervention:
      return &inst.intervention;
    case BowField::kComparator:
      return &inst.comparator;
    case BowField::kOutcome:
      return &inst.outcome;
  }
  return nullptr;
}

bool HasAlnum(const std::string &piece) {
  return std::any_of(piece.begin(), piece.end(), [](char c) {
    return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
           static_cast<unsigned char>(c) >= 0x80;
  });
}

std::array<double, 3> Softmax(std::array<double, 3> z) {
  const double m = std::max({z[0], z[1], z[2]});
  double sum = 0.0;
  for (double &v : z) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double &v : z) v /= sum;
  return z;
}

}  // namespace

double SparseVector::Get(int index) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), index,
      [](const std::pair<int, double> &e, int i) { return e.first < i; });
  return it != entries.end() && it->first == index ? it->second : 0.0;
}

std::vector<std::string> BowTokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string &piece : Tokenizer::Pieces(text)) {
    if (HasAlnum(piece)) out.push_back(std::move(piece));
  }
  return out;
}

TfidfFeaturizer TfidfFeaturizer::Fit(std::span<const FinetuneInstance> train) {
  TfidfFeaturizer f;
  const double n = static_cast<double>(train.size());
  int offset = 0;
  for (int field = 0; field < kNumBowFields; ++field) {
    std::map<std::string, long> df;
    for (const FinetuneInstance &inst : train) {
      const std::string *text = FieldText(inst, field);
      if (text == nullptr) continue;
      std::vector<std::string> tokens = BowTokens(*text);
      std::set<std::string> unique(tokens.begin(), tokens.end());
      for (const std::string &t : unique) ++df[t];
    }
    for (const auto &[token, count] : df) {
      f.vocab_[field].emplace(token, static_cast<int>(f.idf_[field].size()));
      f.idf_[field].push_back(std::log((1.0 + n) / (1.0 + count)) + 1.0);
    }
    f.offsets_[field] = offset;
    offset += static_cast<int>(df.size());
  }
  f.dim_ = offset;
  return f;
}

double TfidfFeaturizer::idf(BowField field, const std::string &token) const {
  const int k = static_cast<int>(field);
  auto it = vocab_[k].find(token);
  return it == vocab_[k].end() ? 0.0 : idf_[k][it->second];
}

SparseVector TfidfFeaturizer::Features(const FinetuneInstance &inst) const {
  SparseVector out;
  for (int field = 0; field < kNumBowFields; ++field) {
    const std::string *text = FieldText(inst, field);
    if (text == nullptr) continue;
    std::map<int, double> tf;
    for (const std::string &t : BowTokens(*text)) {
      auto it = vocab_[field].find(t);
      if (it != vocab_[field].end()) tf[it->second] += 1.0;
    }
    double norm2 = 0.0;
    for (auto &[index, w] : tf) {
      w *= idf_[field][index];
      norm2 += w * w;
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (const auto &[index, w] : tf) {
      out.entries.emplace_back(offsets_[field] + index, w * inv);
    }
  }
  return out;
}

LogisticModel::LogisticModel(int dim, uint64_t seed)
    : weights_(RowMatrix<double>::Zero(3, dim)) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 0.01);
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    weights_.data()[i] = normal(rng);
  }
}

std::array<double, 3> LogisticModel::Probabilities(
    const SparseVector &x) const {
  std::array<double, 3> z = bias_;
  for (int k = 0; k < 3; ++k) {
    for (const auto &[index, w] : x.entries) z[k] += weights_(k, index) * w;
  }
  return Softmax(z);
}

TrialResult LogisticModel::Predict(const SparseVector &x) const {
  const std::array<double, 3> p = Probabilities(x);
  return static_cast<TrialResult>(std::max_element(p.begin(), p.end()) -
                                  p.begin());
}

double LogisticModel::Loss(std::span<const SparseVector> xs,
                           std::span<const int> ys, double l2,
                           RowMatrix<double> *grad_w,
                           std::array<double, 3> *grad_b) const {
  if (xs.size() != ys.size() || xs.empty()) {
    throw ValidationError("logistic loss needs equal, nonempty inputs");
  }
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  if (grad_w != nullptr) *grad_w = l2 * weights_;
  if (grad_b != nullptr) {
    for (int k = 0; k < 3; ++k) (*grad_b)[k] = l2 * bias_[k];
  }
  double loss = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const std::array<double, 3> p = Probabilities(xs[i]);
    loss -= std::log(p[ys[i]]) * inv_n;
    if (grad_w == nullptr && grad_b == nullptr) continue;
    for (int k = 0; k < 3; ++k) {
      const double d = (p[k] - (k == ys[i] ? 1.0 : 0.0)) * inv_n;
      if (grad_b != nullptr) (*grad_b)[k] += d;
      if (grad_w != nullptr) {
        for (const auto &[index, w] : xs[i].entries) (*grad_w)(k, index) += d * w;
      }
    }
  }
  double penalty = weights_.squaredNorm();
  for (double b : bias_) penalty += b * b;
  return loss + 0.5 * l2 * penalty;
}

LogisticModel TrainLogistic(std::span<const SparseVector> xs,
                            std::span<const int> ys, int dim,
                            const LogisticConfig &config,
                            std::vector<double> *loss_curve) {
  for (int y : ys) {
    if (y < 0 || y > 2) throw ValidationError("logistic label out of range");
  }
  for (const SparseVector &x : xs) {
    if (!x.empty() && x.entries.back().first >= dim) {
      throw ValidationError("feature index exceeds the declared dimension");
    }
  }
  LogisticModel model(dim, config.seed);
  RowMatrix<double> grad_w;
  std::array<double, 3> grad_b{};
  double lr = config.learning_rate;
  double loss = model.Loss(xs, ys, config.l2, &grad_w, &grad_b);
  if (loss_curve != nullptr) loss_curve->assign(1, loss);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (!std::isfinite(loss)) throw NumericError("logistic loss diverged");
    LogisticModel trial = model;
    double trial_loss = 0.0;
    int halvings = 0;
    for (;; ++halvings) {
      trial.weights() = model.weights() - lr * grad_w;
      for (int k = 0; k < 3; ++k) {
        trial.bias()[k] = model.bias()[k] - lr * grad_b[k];
      }
      trial_loss = trial.Loss(xs, ys, config.l2, nullptr, nullptr);
      if (!std::isfinite(trial_loss)) {
        throw NumericError("logistic loss diverged");
      }
      if (trial_loss <= loss || halvings >= 60) break;
      lr *= 0.5;
    }
    if (trial_loss > loss) break;  // no descent step exists at this scale
    model = std::move(trial);
    loss = model.Loss(xs, ys, config.l2, &grad_w, &grad_b);
    if (loss_curve != nullptr) loss_curve->push_back(loss);
  }
  return model;
}

}  // namespace ctrp
