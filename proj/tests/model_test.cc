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


#include "ctrp/model.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/error.h"
#include "oracles.h"

namespace ctrp {
namespace {

using Batch = std::vector<const EncodedInstance *>;

ModelConfig SmallConfig() {
  ModelConfig c;
  c.layers = 2;
  c.hidden = 16;
  c.heads = 2;
  c.ff_dim = 32;
  c.vocab_size = 40;
  return c;
}

std::vector<EncodedInstance> RandomInstances(int n, int vocab, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EncodedInstance> out;
  for (int i = 0; i < n; ++i) {
    EncodedInstance e;
    const int b = static_cast<int>(rng() % 6), ev = 1 + rng() % 6;
    e.token_ids.push_back(Tokenizer::kCls);
    for (int k = 0; k < b; ++k) {
      e.token_ids.push_back(Tokenizer::kNumSpecial + rng() % (vocab - 6));
    }
    e.token_ids.push_back(Tokenizer::kSep);
    e.segment_ids.assign(e.token_ids.size(), 0);
    for (int k = 0; k < ev; ++k) {
      e.token_ids.push_back(k == 0 ? Tokenizer::kMask
                                   : Tokenizer::kNumSpecial +
                                         static_cast<int>(rng() % (vocab - 6)));
    }
    e.token_ids.push_back(Tokenizer::kSep);
    e.segment_ids.resize(e.token_ids.size(), 1);
    e.label_id = static_cast<int>(rng() % 3);
    out.push_back(e);
  }
  return out;
}

Batch Pointers(const std::vector<EncodedInstance> &v) {
  Batch b;
  for (const EncodedInstance &e : v) b.push_back(&e);
  return b;
}

BatchOutput<float> ForwardAll(const Model &m, const Batch &b) {
  return Forward<float>(m.layout(), m.params(), b);
}

TEST(ModelConfigTest, Validation) {
  ModelConfig c = SmallConfig();
  EXPECT_NO_THROW(c.Validate());
  c.hidden = 64;
  c.heads = 2;
  EXPECT_EQ(c.head_dim(), 32);
  c.hidden = 63;
  EXPECT_THROW(c.Validate(), Error);
  c = SmallConfig();
  c.max_len = kMinMaxLen - 1;
  EXPECT_THROW(c.Validate(), Error);
  c = SmallConfig();
  c.dropout = 1.0;
  EXPECT_THROW(c.Validate(), Error);
  c = SmallConfig();
  c.vocab_size = 0;
  EXPECT_THROW(c.Validate(), Error);
  EXPECT_EQ(kMinMaxLen, 1 + 256 + 1 + 128 + 1);
}

TEST(ModelInitTest, DeterministicAndShaped) {
  Model a(SmallConfig(), 3), b(SmallConfig(), 3), c(SmallConfig(), 4);
  EXPECT_EQ(a.params(), b.params());
  EXPECT_NE(a.params(), c.params());
  const ParamLayout &layout = a.layout();
  EXPECT_EQ(layout.Find("clm_w").rows, 34);
  EXPECT_EQ(layout.Find("clm_w").cols, 16);
  EXPECT_EQ(layout.Find("ctrp_w").rows, 3);
  EXPECT_EQ(layout.Find("ctrp_w").cols, 34);
  EXPECT_THROW(layout.Find("nope"), Error);
  for (const TensorInfo &t : layout.tensors()) {
    EXPECT_EQ(t.offset % kParamAlignment, 0u) << t.name;
    const bool gain = t.name.ends_with("_g");
    const bool bias = t.rows == 1 && !gain;
    for (size_t i = t.offset; i < t.offset + t.size(); ++i) {
      const float v = a.params()[i];
      EXPECT_TRUE(std::isfinite(v));
      if (gain) {
        EXPECT_EQ(v, 1.0f) << t.name;
      } else if (bias) {
        EXPECT_EQ(v, 0.0f) << t.name;
      }
    }
  }
}

TEST(ModelGradientTest, LabelHeadMatchesFiniteDifferences) {
  testing::TinyModelFixture f;
  ParamLayout layout(f.config);
  testing::GradientCheck check =
      testing::CheckModelGradient(layout, f.params, f.batch(), Head::kLabel);
  EXPECT_LT(check.max_group_error, 1e-4) << check.worst_group;
}

TEST(ModelGradientTest, ResultHeadMatchesFiniteDifferences) {
  testing::TinyModelFixture f;
  ParamLayout layout(f.config);
  testing::GradientCheck check =
      testing::CheckModelGradient(layout, f.params, f.batch(), Head::kResult);
  EXPECT_LT(check.max_group_error, 1e-4) << check.worst_group;
}

TEST(ModelGradientTest, EncoderGradientCanBeSkipped) {
  testing::TinyModelFixture f;
  ParamLayout layout(f.config);
  std::vector<double> grad(f.params.size());
  ForwardOptions options;
  options.encoder_grad = false;
  Batch batch = f.batch();
  ComputeLoss<double>(layout, f.params, batch, Head::kResult, options, grad,
                      nullptr);
  for (size_t i = 0; i < layout.clm_w; ++i) EXPECT_EQ(grad[i], 0.0);
  double head = 0;
  for (size_t i = layout.ctrp_w; i < grad.size(); ++i) head += std::abs(grad[i]);
  EXPECT_GT(head, 0.0);
}

TEST(ModelForwardTest, BatchInvariance) {
  Model m(SmallConfig(), 1);
  std::vector<EncodedInstance> data = RandomInstances(8, 40, 2);
  BatchOutput<float> all = ForwardAll(m, Pointers(data));
  for (int i = 0; i < 8; ++i) {
    BatchOutput<float> one = ForwardAll(m, {&data[i]});
    for (int j = 0; j < m.config().hidden; ++j) {
      EXPECT_NEAR(one.cls(0, j), all.cls(i, j), 1e-6);
    }
  }
}

TEST(ModelForwardTest, PermutationEquivariance) {
  Model m(SmallConfig(), 1);
  std::vector<EncodedInstance> data = RandomInstances(6, 40, 4);
  Batch order = Pointers(data);
  Batch reversed(order.rbegin(), order.rend());
  BatchOutput<float> a = ForwardAll(m, order), b = ForwardAll(m, reversed);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < m.config().hidden; ++j) {
      EXPECT_NEAR(a.cls(i, j), b.cls(5 - i, j), 1e-6);
    }
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(a.result_probs(i, k), b.result_probs(5 - i, k), 1e-6);
    }
  }
}

TEST(ModelForwardTest, PaddedTailDoesNotChangeCls) {
  Model m(SmallConfig(), 1);
  std::vector<EncodedInstance> data = RandomInstances(4, 40, 6);
  for (const EncodedInstance &e : data) {
    EncodedInstance padded = e;
    for (int k = 0; k < 5; ++k) {
      padded.token_ids.push_back(Tokenizer::kPad);
      padded.segment_ids.push_back(1);
    }
    BatchOutput<float> a = ForwardAll(m, {&e}), b = ForwardAll(m, {&padded});
    for (int j = 0; j < m.config().hidden; ++j) {
      EXPECT_NEAR(a.cls(0, j), b.cls(0, j), 1e-6);
    }
  }
}

TEST(ModelForwardTest, RejectsBadInputs) {
  Model m(SmallConfig(), 1);
  std::vector<EncodedInstance> data = RandomInstances(1, 40, 6);
  EncodedInstance bad = data[0];
  bad.token_ids[1] = 40;
  EXPECT_THROW(ForwardAll(m, {&bad}), Error);
  bad = data[0];
  bad.token_ids.assign(kMinMaxLen + 20, 7);
  bad.segment_ids.assign(kMinMaxLen + 20, 0);
  EXPECT_THROW(ForwardAll(m, {&bad}), Error);
  bad = data[0];
  bad.label_id = 3;
  Batch batch = {&bad};
  EXPECT_THROW(ComputeLoss<float>(m.layout(), m.params(), batch, Head::kResult,
                                  {}, {}, nullptr),
               Error);
}

// Scalar recomputation of both heads from h_cls.
struct ScalarHeads {
  std::vector<double> label_probs;
  std::vector<double> result_probs;
};

ScalarHeads ScalarCompose(const Model &m, const float *cls) {
  const ParamLayout &l = m.layout();
  const ModelConfig &c = m.config();
  const ParamVector &p = m.params();
  std::vector<double> logits(c.num_labels);
  for (int k = 0; k < c.num_labels; ++k) {
    double z = p[l.clm_b + k];
    for (int i = 0; i < c.hidden; ++i) {
      z += static_cast<double>(p[l.clm_w + k * c.hidden + i]) * cls[i];
    }
    logits[k] = z;
  }
  auto softmax = [](std::vector<double> z) {
    double mx = z[0];
    for (double v : z) mx = std::max(mx, v);
    double s = 0;
    for (double &v : z) s += (v = std::exp(v - mx));
    for (double &v : z) v /= s;
    return z;
  };
  ScalarHeads out;
  out.label_probs = softmax(logits);
  std::vector<double> r(3);
  for (int k = 0; k < 3; ++k) {
    double z = p[l.ctrp_b + k];
    for (int j = 0; j < c.num_labels; ++j) {
      z += static_cast<double>(p[l.ctrp_w + k * c.num_labels + j]) *
           out.label_probs[j];
    }
    r[k] = z;
  }
  out.result_probs = softmax(r);
  return out;
}

TEST(ModelHeadsTest, CompositionMatchesScalarOracle) {
  Model m(SmallConfig(), 8);
  std::mt19937_64 rng(8);
  std::normal_distribution<float> normal(0.0f, 0.7f);
  ParamVector &p = m.mutable_params();
  for (size_t i = m.layout().clm_w; i < p.size(); ++i) p[i] = normal(rng);
  std::vector<EncodedInstance> data = RandomInstances(5, 40, 9);
  BatchOutput<float> out = ForwardAll(m, Pointers(data));
  for (int b = 0; b < 5; ++b) {
    std::vector<float> cls(out.cls.row(b).data(),
                           out.cls.row(b).data() + m.config().hidden);
    ScalarHeads s = ScalarCompose(m, cls.data());
    double label_sum = 0, result_sum = 0;
    for (int k = 0; k < 34; ++k) {
      EXPECT_NEAR(out.label_probs(b, k), s.label_probs[k], 1e-5);
      EXPECT_GE(out.label_probs(b, k), 0.0f);
      label_sum += out.label_probs(b, k);
    }
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(out.result_probs(b, k), s.result_probs[k], 1e-5);
      result_sum += out.result_probs(b, k);
    }
    EXPECT_NEAR(label_sum, 1.0, 1e-6);
    EXPECT_NEAR(result_sum, 1.0, 1e-6);
  }
}

TEST(ModelHeadsTest, LossIsHandComputedCrossEntropy) {
  Model m(SmallConfig(), 8);
  std::vector<EncodedInstance> data = RandomInstances(2, 40, 10);
  data[0].label_id = 5;
  data[1].label_id = 30;
  Batch batch = Pointers(data);
  BatchOutput<float> out;
  const float loss = ComputeLoss<float>(m.layout(), m.params(), batch,
                                        Head::kLabel, {}, {}, &out);
  double expected = 0;
  for (int b = 0; b < 2; ++b) {
    ScalarHeads s = ScalarCompose(m, out.cls.row(b).data());
    expected -= std::log(s.label_probs[data[b].label_id]);
  }
  EXPECT_NEAR(loss, expected / 2, 1e-5);
}

TEST(ModelHeadsTest, UniformLabelHeadGivesLn34) {
  Model m(SmallConfig(), 8);
  ParamVector &p = m.mutable_params();
  std::fill(p.begin() + m.layout().clm_w, p.begin() + m.layout().ctrp_w, 0.0f);
  std::vector<EncodedInstance> data = RandomInstances(4, 40, 11);
  for (EncodedInstance &e : data) e.label_id = 17;
  Batch batch = Pointers(data);
  const float loss = ComputeLoss<float>(m.layout(), m.params(), batch,
                                        Head::kLabel, {}, {}, nullptr);
  EXPECT_NEAR(loss, std::log(34.0), 1e-5);
  EXPECT_NEAR(std::log(34.0), 3.526, 1e-3);
}

TEST(ModelHeadsTest, ConfidentCorrectHeadGivesZeroLoss) {
  Model m(SmallConfig(), 8);
  ParamVector &p = m.mutable_params();
  std::fill(p.begin() + m.layout().clm_w, p.begin() + m.layout().ctrp_w, 0.0f);
  p[m.layout().clm_b + 17] = 60.0f;
  std::vector<EncodedInstance> data = RandomInstances(4, 40, 11);
  for (EncodedInstance &e : data) e.label_id = 17;
  Batch batch = Pointers(data);
  EXPECT_LT(ComputeLoss<float>(m.layout(), m.params(), batch, Head::kLabel, {},
                               {}, nullptr),
            1e-6);
}

TEST(ModelHeadsTest, ZeroResultHeadIsUniform) {
  Model m(SmallConfig(), 8);
  ParamVector &p = m.mutable_params();
  std::fill(p.begin() + m.layout().ctrp_w, p.end(), 0.0f);
  std::vector<EncodedInstance> data = RandomInstances(3, 40, 12);
  BatchOutput<float> out = ForwardAll(m, Pointers(data));
  for (int b = 0; b < 3; ++b) {
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(out.result_probs(b, k), 1.0 / 3, 1e-7);
  }
}

}  // namespace
}  // namespace ctrp
