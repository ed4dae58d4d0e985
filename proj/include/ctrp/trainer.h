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

// Adam training loops for both heads, batch inference and embedding export.
// Training is single-threaded and fully determined by the seed: the epoch
// order and every dropout mask derive from (seed, epoch, batch).

#ifndef CTRP_TRAINER_H_
#define CTRP_TRAINER_H_

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "ctrp/dataset.h"
#include "ctrp/model.h"

namespace ctrp {

struct TrainConfig {
  double learning_rate = 1e-3;
  // Learning rate of the result head.
  double head_learning_rate = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.0;  // decoupled
  double clip_norm = 1.0;     // <= 0 disables clipping
  int batch_size = 32;
  int epochs = 20;
  uint64_t seed = 1;

  // Throws ValidationError on non-positive rates or sizes.
  void Validate() const;
};

enum class FinetuneMode { kFull, kHeadOnly };

std::string_view FinetuneModeName(FinetuneMode mode);  // "full", "head_only"
FinetuneMode ParseFinetuneMode(std::string_view name);

// Which parameter groups receive updates.
struct TrainScope {
  bool encoder = true;
  bool label_head = true;
  bool result_head = true;
};

struct EpochStats {
  int epoch = 0;  // 1-based
  double loss = 0.0;
  double accuracy = 0.0;  // on the training data, dropout active
  size_t steps = 0;
};

// Called after every epoch; returning false stops training.
using EpochCallback = std::function<bool(const EpochStats &)>;

// Throws NumericError when a loss or gradient becomes non-finite.
std::vector<EpochStats> Train(Model *model,
                              std::span<const EncodedInstance> data, Head head,
                              const TrainConfig &config,
                              const TrainScope &scope,
                              const EpochCallback &callback = nullptr);

std::vector<EpochStats> Pretrain(Model *model,
                                 std::span<const EncodedInstance> data,
                                 const TrainConfig &config,
                                 const EpochCallback &callback = nullptr);

std::vector<EpochStats> Finetune(Model *model,
                                 std::span<const EncodedInstance> data,
                                 const TrainConfig &config, FinetuneMode mode,
                                 bool freeze_label_head,
                                 const EpochCallback &callback = nullptr);

struct Prediction {
  int label = 0;
  std::vector<double> probs;
};

std::vector<Prediction> Predict(const Model &model,
                                std::span<const EncodedInstance> data,
                                Head head, int batch_size = 64);

// Fraction of instances whose argmax equals label_id; 0 for empty input.
double Accuracy(const Model &model, std::span<const EncodedInstance> data,
                Head head);

// One row of h_cls per instance, in input order.
RowMatrix<float> ExportEmbeddings(const Model &model,
                                  std::span<const EncodedInstance> data,
                                  int batch_size = 64);

// CSV "epoch,loss,accuracy,steps".
void WriteLossCsv(std::span<const EpochStats> stats, std::ostream &out);

}  // namespace ctrp

#endif  // CTRP_TRAINER_H_
