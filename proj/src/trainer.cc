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

#include "ctrp/trainer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "ctrp/error.h"

namespace ctrp {
namespace {

uint64_t DeriveSeed(uint64_t seed, uint64_t a, uint64_t b) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
  uint32_t words[2];
  seq.generate(words, words + 2);
  return static_cast<uint64_t>(words[0]) << 32 | words[1];
}

struct Group {
  size_t begin;
  size_t end;
  double lr;
};

template <typename M>
int ArgMax(const M &row) {
  Eigen::Index best;
  row.maxCoeff(&best);
  return static_cast<int>(best);
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(learning_rate > 0) || !(head_learning_rate > 0)) {
    throw ValidationError("learning rates must be positive");
  }
  if (!(beta1 >= 0 && beta1 < 1) || !(beta2 >= 0 && beta2 < 1) ||
      !(epsilon > 0)) {
    throw ValidationError("Adam betas must lie in [0, 1), epsilon > 0");
  }
  if (weight_decay < 0) throw ValidationError("weight decay must be >= 0");
  if (batch_size < 1) throw ValidationError("batch size must be >= 1");
  if (epochs < 0) throw ValidationError("epochs must be >= 0");
}

std::string_view FinetuneModeName(FinetuneMode mode) {
  return mode == FinetuneMode::kFull ? "full" : "head_only";
}

FinetuneMode ParseFinetuneMode(std::string_view name) {
  if (name == "full") return FinetuneMode::kFull;
  if (name == "head_only") return FinetuneMode::kHeadOnly;
  throw ValidationError("unknown fine-tuning mode \"" + std::string(name) +
                        "\" (expected full or head_only)");
}

std::vector<EpochStats> Train(Model *model,
                              std::span<const EncodedInstance> data, Head head,
                              const TrainConfig &config,
                              const TrainScope &scope,
                              const EpochCallback &callback) {
  config.Validate();
  std::vector<EpochStats> history;
  if (data.empty() || config.epochs == 0) return history;

  const ParamLayout &layout = model->layout();
  ParamVector &params = model->mutable_params();
  std::vector<Group> groups;
  if (scope.encoder) groups.push_back({0, layout.clm_w, config.learning_rate});
  if (scope.label_head) {
    groups.push_back({layout.clm_w, layout.ctrp_w, config.learning_rate});
  }
  if (scope.result_head) {
    groups.push_back({layout.ctrp_w, layout.size(), config.head_learning_rate});
  }
  if (groups.empty()) return history;

  ParamVector grad(layout.size());
  ParamVector m(layout.size(), 0.0f), v(layout.size(), 0.0f);
  std::vector<size_t> order(data.size());
  std::vector<const EncodedInstance *> batch;
  BatchOutput<float> out;
  ForwardOptions options;
  options.train = true;
  options.encoder_grad = scope.encoder;
  long step = 0;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(DeriveSeed(config.seed, epoch, 0));
    std::shuffle(order.begin(), order.end(), rng);
    EpochStats stats;
    stats.epoch = epoch;
    double loss_sum = 0.0;
    size_t correct = 0;
    for (size_t start = 0; start < order.size();
         start += static_cast<size_t>(config.batch_size)) {
      const size_t stop =
          std::min(order.size(), start + static_cast<size_t>(config.batch_size));
      batch.clear();
      for (size_t i = start; i < stop; ++i) batch.push_back(&data[order[i]]);
      options.dropout_seed = DeriveSeed(config.seed, epoch, stats.steps + 1);
      const float loss = ComputeLoss<float>(
          layout, params, batch, head, options, grad, &out);
      loss_sum += static_cast<double>(loss) * batch.size();
      const RowMatrix<float> &probs =
          head == Head::kLabel ? out.label_probs : out.result_probs;
      for (size_t b = 0; b < batch.size(); ++b) {
        if (ArgMax(probs.row(b)) == batch[b]->label_id) ++correct;
      }

      double norm2 = 0.0;
      for (const Group &g : groups) {
        for (size_t i = g.begin; i < g.end; ++i) {
          norm2 += static_cast<double>(grad[i]) * grad[i];
        }
      }
      if (!std::isfinite(norm2)) {
        throw NumericError("non-finite gradient at epoch " +
                           std::to_string(epoch) + ", step " +
                           std::to_string(stats.steps + 1));
      }
      const double norm = std::sqrt(norm2);
      const double clip = (config.clip_norm > 0 && norm > config.clip_norm)
                              ? config.clip_norm / norm
                              : 1.0;
      ++step;
      const double bias1 = 1.0 - std::pow(config.beta1, step);
      const double bias2 = 1.0 - std::pow(config.beta2, step);
      const float b1 = static_cast<float>(config.beta1);
      const float b2 = static_cast<float>(config.beta2);
      for (const Group &g : groups) {
        const float lr = static_cast<float>(g.lr);
        const float wd = static_cast<float>(g.lr * config.weight_decay);
        const float c1 = static_cast<float>(1.0 / bias1);
        const float c2 = static_cast<float>(1.0 / bias2);
        const float eps = static_cast<float>(config.epsilon);
        for (size_t i = g.begin; i < g.end; ++i) {
          const float gi = grad[i] * static_cast<float>(clip);
          m[i] = b1 * m[i] + (1.0f - b1) * gi;
          v[i] = b2 * v[i] + (1.0f - b2) * gi * gi;
          const float mhat = m[i] * c1;
          const float vhat = v[i] * c2;
          params[i] -= lr * mhat / (std::sqrt(vhat) + eps) + wd * params[i];
        }
      }
      ++stats.steps;
    }
    stats.loss = loss_sum / static_cast<double>(data.size());
    stats.accuracy =
        static_cast<double>(correct) / static_cast<double>(data.size());
    history.push_back(stats);
    if (callback && !callback(stats)) break;
  }
  return history;
}

std::vector<EpochStats> Pretrain(Model *model,
                                 std::span<const EncodedInstance> data,
                                 const TrainConfig &config,
                                 const EpochCallback &callback) {
  return Train(model, data, Head::kLabel, config,
               {.encoder = true, .label_head = true, .result_head = false},
               callback);
}

std::vector<EpochStats> Finetune(Model *model,
                                 std::span<const EncodedInstance> data,
                                 const TrainConfig &config, FinetuneMode mode,
                                 bool freeze_label_head,
                                 const EpochCallback &callback) {
  TrainScope scope;
  scope.encoder = mode == FinetuneMode::kFull;
  scope.label_head = !freeze_label_head;
  scope.result_head = true;
  return Train(model, data, Head::kResult, config, scope, callback);
}

std::vector<Prediction> Predict(const Model &model,
                                std::span<const EncodedInstance> data,
                                Head head, int batch_size) {
  std::vector<Prediction> out;
  out.reserve(data.size());
  std::vector<const EncodedInstance *> batch;
  for (size_t start = 0; start < data.size();
       start += static_cast<size_t>(batch_size)) {
    const size_t stop =
        std::min(data.size(), start + static_cast<size_t>(batch_size));
    batch.clear();
    for (size_t i = start; i < stop; ++i) batch.push_back(&data[i]);
    BatchOutput<float> result =
        Forward<float>(model.layout(), model.params(), batch);
    const RowMatrix<float> &probs =
        head == Head::kLabel ? result.label_probs : result.result_probs;
    for (Eigen::Index b = 0; b < probs.rows(); ++b) {
      Prediction p;
      p.label = ArgMax(probs.row(b));
      p.probs.assign(probs.row(b).data(), probs.row(b).data() + probs.cols());
      out.push_back(std::move(p));
    }
  }
  return out;
}

double Accuracy(const Model &model, std::span<const EncodedInstance> data,
                Head head) {
  if (data.empty()) return 0.0;
  std::vector<Prediction> preds = Predict(model, data, head);
  size_t correct = 0;
  for (size_t i = 0; i < data.size(); ++i) {
    if (preds[i].label == data[i].label_id) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

RowMatrix<float> ExportEmbeddings(const Model &model,
                                  std::span<const EncodedInstance> data,
                                  int batch_size) {
  RowMatrix<float> out(static_cast<Eigen::Index>(data.size()),
                       model.config().hidden);
  std::vector<const EncodedInstance *> batch;
  for (size_t start = 0; start < data.size();
       start += static_cast<size_t>(batch_size)) {
    const size_t stop =
        std::min(data.size(), start + static_cast<size_t>(batch_size));
    batch.clear();
    for (size_t i = start; i < stop; ++i) batch.push_back(&data[i]);
    BatchOutput<float> result =
        Forward<float>(model.layout(), model.params(), batch);
    out.middleRows(static_cast<Eigen::Index>(start), result.cls.rows()) =
        result.cls;
  }
  return out;
}

void WriteLossCsv(std::span<const EpochStats> stats, std::ostream &out) {
  out << "epoch,loss,accuracy,steps\n";
  char line[128];
  for (const EpochStats &s : stats) {
    std::snprintf(line, sizeof(line), "%d,%.6f,%.6f,%zu\n", s.epoch, s.loss,
                  s.accuracy, s.steps);
    out << line;
  }
}

}  // namespace ctrp
