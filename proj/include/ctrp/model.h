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

// A small post-layer-norm transformer encoder with two stacked heads:
//
//   label head:   p_label  = softmax(W1 h_cls + b1)       over the 34 labels
//   result head:  p_result = softmax(W2 p_label + b2)     over up/nodiff/down
//
// The result head reads the label probabilities, not their logits. All
// parameters live in one flat vector described by a ParamLayout; matrices
// are row-major. The math is templated on the scalar so the same code runs
// in float for training and in double for gradient checking.
//
// Batches are packed without padding: the rows of all sequences are stacked
// and attention runs per sequence. [PAD] tokens inside a sequence are
// masked as attention keys.

#ifndef CTRP_MODEL_H_
#define CTRP_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/StdVector>

#include "ctrp/dataset.h"

namespace ctrp {

struct ModelConfig {
  int layers = 2;
  int hidden = 64;
  int heads = 2;
  int ff_dim = 256;
  int max_len = 400;
  int vocab_size = 0;
  int num_labels = 34;
  double dropout = 0.1;

  // Throws ValidationError on non-positive sizes, hidden % heads != 0,
  // max_len below the longest encodable input or dropout outside [0, 1).
  void Validate() const;
  int head_dim() const { return hidden / heads; }

  bool operator==(const ModelConfig &other) const = default;
};

// Longest sequence an EncodedInstance can have: [CLS] B [SEP] E [SEP].
inline constexpr int kMinMaxLen =
    1 + kMaxBackgroundTokens + 1 + kMaxEvidenceTokens + 1;

// Tensor offsets are multiples of kParamAlignment elements and parameter
// storage is 64-byte aligned, so vectorized kernels see the same alignment
// on every run and results do not depend on the heap layout.
inline constexpr size_t kParamAlignment = 16;

using ParamVector = std::vector<float, Eigen::aligned_allocator<float>>;

struct TensorInfo {
  std::string name;
  int rows = 0;
  int cols = 0;
  size_t offset = 0;

  size_t size() const { return static_cast<size_t>(rows) * cols; }
};

class ParamLayout {
 public:
  struct Layer {
    size_t wq, bq, wk, bk, wv, bv, wo, bo;
    size_t ln1_g, ln1_b, w1, b1, w2, b2, ln2_g, ln2_b;
  };

  explicit ParamLayout(const ModelConfig &config);

  const ModelConfig &config() const { return config_; }
  const std::vector<TensorInfo> &tensors() const { return tensors_; }
  size_t size() const { return size_; }
  // Throws ValidationError for unknown names.
  const TensorInfo &Find(const std::string &name) const;

  size_t tok_emb, pos_emb, seg_emb, emb_ln_g, emb_ln_b;
  std::vector<Layer> layers;
  size_t clm_w, clm_b, ctrp_w, ctrp_b;

 private:
  size_t Add(const std::string &name, int rows, int cols);

  ModelConfig config_;
  std::vector<TensorInfo> tensors_;
  size_t size_ = 0;
};

enum class Head { kLabel, kResult };

struct ForwardOptions {
  bool train = false;  // enables dropout
  uint64_t dropout_seed = 0;
  // When false, backward stops at the heads (encoder gradients stay zero).
  bool encoder_grad = true;
};

template <typename T>
using RowMatrix =
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename T>
struct BatchOutput {
  RowMatrix<T> hidden;         // final states of all packed rows
  std::vector<int> offsets;    // first row of each sequence in `hidden`
  RowMatrix<T> cls;            // [batch x hidden]
  RowMatrix<T> label_probs;    // [batch x num_labels]
  RowMatrix<T> result_probs;   // [batch x 3]
};

// Mean cross-entropy of `head` over the batch, using each instance's
// label_id. When `grad` is non-null it receives dLoss/dParams (overwritten,
// same layout as `params`). `out` may be null. Throws ValidationError for
// token ids outside the vocabulary, sequences longer than max_len, or label
// ids outside the head's range.
template <typename T>
T ComputeLoss(const ParamLayout &layout, std::span<const T> params,
              std::span<const EncodedInstance *const> batch, Head head,
              const ForwardOptions &options, std::span<T> grad,
              BatchOutput<T> *out);

// Forward pass only, no loss.
template <typename T>
BatchOutput<T> Forward(const ParamLayout &layout, std::span<const T> params,
                       std::span<const EncodedInstance *const> batch);

// Normal(0, 0.02) weights and embeddings, zero biases, unit layer-norm
// gains, zero padding. Bit-identical for identical (config, seed).
ParamVector InitParams(const ParamLayout &layout, uint64_t seed);

class Model {
 public:
  Model(const ModelConfig &config, uint64_t seed);
  Model(const ModelConfig &config, ParamVector params);

  const ModelConfig &config() const { return layout_.config(); }
  const ParamLayout &layout() const { return layout_; }
  const ParamVector &params() const { return params_; }
  ParamVector &mutable_params() { return params_; }

 private:
  ParamLayout layout_;
  ParamVector params_;
};

}  // namespace ctrp

#endif  // CTRP_MODEL_H_
