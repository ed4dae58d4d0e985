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
#include <limits>
#include <random>

#include "ctrp/error.h"
#include "ctrp/instances.h"
#include "ctrp/tokenizer.h"

namespace ctrp {

void ModelConfig::Validate() const {
  if (layers < 1 || hidden < 1 || heads < 1 || ff_dim < 1 ||
      vocab_size < 1 || num_labels < 2) {
    throw ValidationError("model sizes must be positive");
  }
  if (hidden % heads != 0) {
    throw ValidationError("hidden size " + std::to_string(hidden) +
                          " is not divisible by " + std::to_string(heads) +
                          " heads");
  }
  if (max_len < kMinMaxLen) {
    throw ValidationError("max_len must be at least " +
                          std::to_string(kMinMaxLen));
  }
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    throw ValidationError("dropout must lie in [0, 1)");
  }
}

ParamLayout::ParamLayout(const ModelConfig &config) : config_(config) {
  config.Validate();
  const int h = config.hidden;
  tok_emb = Add("tok_emb", config.vocab_size, h);
  pos_emb = Add("pos_emb", config.max_len, h);
  seg_emb = Add("seg_emb", 2, h);
  emb_ln_g = Add("emb_ln_g", 1, h);
  emb_ln_b = Add("emb_ln_b", 1, h);
  for (int l = 0; l < config.layers; ++l) {
    const std::string p = "layer" + std::to_string(l) + ".";
    Layer layer;
    layer.wq = Add(p + "wq", h, h);
    layer.bq = Add(p + "bq", 1, h);
    layer.wk = Add(p + "wk", h, h);
    layer.bk = Add(p + "bk", 1, h);
    layer.wv = Add(p + "wv", h, h);
    layer.bv = Add(p + "bv", 1, h);
    layer.wo = Add(p + "wo", h, h);
    layer.bo = Add(p + "bo", 1, h);
    layer.ln1_g = Add(p + "ln1_g", 1, h);
    layer.ln1_b = Add(p + "ln1_b", 1, h);
    layer.w1 = Add(p + "w1", h, config.ff_dim);
    layer.b1 = Add(p + "b1", 1, config.ff_dim);
    layer.w2 = Add(p + "w2", config.ff_dim, h);
    layer.b2 = Add(p + "b2", 1, h);
    layer.ln2_g = Add(p + "ln2_g", 1, h);
    layer.ln2_b = Add(p + "ln2_b", 1, h);
    layers.push_back(layer);
  }
  clm_w = Add("clm_w", config.num_labels, h);
  clm_b = Add("clm_b", 1, config.num_labels);
  ctrp_w = Add("ctrp_w", kNumResults, config.num_labels);
  ctrp_b = Add("ctrp_b", 1, kNumResults);
}

size_t ParamLayout::Add(const std::string &name, int rows, int cols) {
  size_ = (size_ + kParamAlignment - 1) / kParamAlignment * kParamAlignment;
  tensors_.push_back({name, rows, cols, size_});
  size_ += static_cast<size_t>(rows) * cols;
  return tensors_.back().offset;
}

const TensorInfo &ParamLayout::Find(const std::string &name) const {
  for (const TensorInfo &t : tensors_) {
    if (t.name == name) return t;
  }
  throw ValidationError("unknown tensor " + name);
}

namespace {

constexpr double kLayerNormEps = 1e-5;

template <typename T>
using Mat = RowMatrix<T>;
template <typename T>
using RowVec = Eigen::Matrix<T, 1, Eigen::Dynamic>;
template <typename T>
using ColVec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using ConstMap = Eigen::Map<const Mat<T>>;
template <typename T>
using MutMap = Eigen::Map<Mat<T>>;
template <typename T>
using ConstRowMap = Eigen::Map<const RowVec<T>>;
template <typename T>
using MutRowMap = Eigen::Map<RowVec<T>>;

template <typename T>
struct LayerNormCache {
  Mat<T> xhat;
  ColVec<T> rstd;
};

template <typename T>
void LayerNormForward(const Mat<T> &x, const T *gain, const T *bias,
                      Mat<T> *y, LayerNormCache<T> *cache) {
  const Eigen::Index n = x.rows(), h = x.cols();
  ConstRowMap<T> g(gain, h), b(bias, h);
  cache->xhat.resize(n, h);
  cache->rstd.resize(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const T mean = x.row(r).mean();
    RowVec<T> centered = x.row(r).array() - mean;
    const T var = centered.squaredNorm() / static_cast<T>(h);
    const T rstd = T(1) / std::sqrt(var + static_cast<T>(kLayerNormEps));
    cache->rstd(r) = rstd;
    cache->xhat.row(r) = centered * rstd;
  }
  *y = (cache->xhat.array().rowwise() * g.array()).rowwise() + b.array();
}

template <typename T>
Mat<T> LayerNormBackward(const Mat<T> &dy, const LayerNormCache<T> &cache,
                         const T *gain, T *dgain, T *dbias) {
  const Eigen::Index n = dy.rows(), h = dy.cols();
  ConstRowMap<T> g(gain, h);
  MutRowMap<T>(dgain, h) +=
      (dy.array() * cache.xhat.array()).colwise().sum().matrix();
  MutRowMap<T>(dbias, h) += dy.colwise().sum();
  Mat<T> dxhat = dy.array().rowwise() * g.array();
  Mat<T> dx(n, h);
  for (Eigen::Index r = 0; r < n; ++r) {
    const T m1 = dxhat.row(r).mean();
    const T m2 = (dxhat.row(r).array() * cache.xhat.row(r).array()).mean();
    dx.row(r) = cache.rstd(r) *
                (dxhat.row(r).array() - m1 - cache.xhat.row(r).array() * m2);
  }
  return dx;
}

template <typename T>
T Gelu(T x) {
  return T(0.5) * x * (T(1) + std::erf(x * static_cast<T>(M_SQRT1_2)));
}

template <typename T>
T GeluGrad(T x) {
  const T cdf = T(0.5) * (T(1) + std::erf(x * static_cast<T>(M_SQRT1_2)));
  const T pdf = std::exp(T(-0.5) * x * x) * static_cast<T>(0.5 * M_2_SQRTPI *
                                                            M_SQRT1_2);
  return cdf + x * pdf;
}

template <typename T>
void SoftmaxRows(Mat<T> *m) {
  for (Eigen::Index r = 0; r < m->rows(); ++r) {
    const T max = m->row(r).maxCoeff();
    m->row(r) = (m->row(r).array() - max).exp();
    m->row(r) /= m->row(r).sum();
  }
}

// Inverted dropout: entries are 0 or 1/(1-p).
template <typename T>
Mat<T> DropoutMask(Eigen::Index rows, Eigen::Index cols, double p,
                   std::mt19937_64 &rng) {
  Mat<T> mask(rows, cols);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const T keep = static_cast<T>(1.0 / (1.0 - p));
  for (Eigen::Index i = 0; i < mask.size(); ++i) {
    mask.data()[i] = u(rng) < p ? T(0) : keep;
  }
  return mask;
}

template <typename T>
struct LayerCache {
  Mat<T> x;  // layer input
  Mat<T> q, k, v;
  std::vector<Mat<T>> probs;  // per (sequence, head)
  Mat<T> ctx;
  Mat<T> attn_mask;
  LayerNormCache<T> ln1;
  Mat<T> h1;
  Mat<T> a1;
  Mat<T> f;
  Mat<T> ff_mask;
  LayerNormCache<T> ln2;
};

template <typename T>
class Pass {
 public:
  Pass(const ParamLayout &layout, std::span<const T> params,
       std::span<const EncodedInstance *const> batch)
      : layout_(layout),
        cfg_(layout.config()),
        p_(params.data()),
        batch_(batch) {
    if (params.size() != layout.size()) {
      throw ValidationError("parameter vector size does not match layout");
    }
    int n = 0;
    for (const EncodedInstance *inst : batch) {
      const int len = static_cast<int>(inst->token_ids.size());
      if (len < 1 || len > cfg_.max_len) {
        throw ValidationError("instance " + inst->id + " has length " +
                              std::to_string(len) + " outside [1, " +
                              std::to_string(cfg_.max_len) + "]");
      }
      if (inst->segment_ids.size() != inst->token_ids.size()) {
        throw ValidationError("instance " + inst->id +
                              ": token and segment lengths differ");
      }
      for (int i = 0; i < len; ++i) {
        const int t = inst->token_ids[i];
        const int s = inst->segment_ids[i];
        if (t < 0 || t >= cfg_.vocab_size) {
          throw ValidationError("instance " + inst->id + ": token id " +
                                std::to_string(t) + " out of range");
        }
        if (s != 0 && s != 1) {
          throw ValidationError("instance " + inst->id +
                                ": segment id must be 0 or 1");
        }
      }
      offsets_.push_back(n);
      lengths_.push_back(len);
      n += len;
    }
    n_ = n;
  }

  ConstMap<T> M(size_t offset, int rows, int cols) const {
    return ConstMap<T>(p_ + offset, rows, cols);
  }
  ConstRowMap<T> V(size_t offset, int cols) const {
    return ConstRowMap<T>(p_ + offset, cols);
  }

  void Forward(const ForwardOptions &options, bool keep_cache) {
    const int h = cfg_.hidden;
    const double p = options.train ? cfg_.dropout : 0.0;
    std::mt19937_64 rng(options.dropout_seed);

    Mat<T> e(n_, h);
    ConstMap<T> tok = M(layout_.tok_emb, cfg_.vocab_size, h);
    ConstMap<T> pos = M(layout_.pos_emb, cfg_.max_len, h);
    ConstMap<T> seg = M(layout_.seg_emb, 2, h);
    for (size_t b = 0; b < batch_.size(); ++b) {
      const EncodedInstance &inst = *batch_[b];
      for (int i = 0; i < lengths_[b]; ++i) {
        e.row(offsets_[b] + i) = tok.row(inst.token_ids[i]) + pos.row(i) +
                                 seg.row(inst.segment_ids[i]);
      }
    }
    Mat<T> x;
    LayerNormForward<T>(e, p_ + layout_.emb_ln_g, p_ + layout_.emb_ln_b, &x,
                        &emb_ln_);
    if (p > 0) {
      emb_mask_ = DropoutMask<T>(n_, h, p, rng);
      x.array() *= emb_mask_.array();
    }

    caches_.assign(keep_cache ? cfg_.layers : 1, LayerCache<T>());
    for (int l = 0; l < cfg_.layers; ++l) {
      LayerCache<T> &c = caches_[keep_cache ? l : 0];
      LayerForward(layout_.layers[l], p, rng, &x, &c);
    }
    hidden_ = std::move(x);

    const int k = cfg_.num_labels;
    cls_.resize(static_cast<Eigen::Index>(batch_.size()), h);
    for (size_t b = 0; b < batch_.size(); ++b) {
      cls_.row(b) = hidden_.row(offsets_[b]);
    }
    label_probs_ = cls_ * M(layout_.clm_w, k, h).transpose();
    label_probs_.rowwise() += V(layout_.clm_b, k);
    SoftmaxRows(&label_probs_);
    result_probs_ = label_probs_ * M(layout_.ctrp_w, kNumResults, k).transpose();
    result_probs_.rowwise() += V(layout_.ctrp_b, kNumResults);
    SoftmaxRows(&result_probs_);
  }

  T Loss(Head head) const {
    const Mat<T> &probs = head == Head::kLabel ? label_probs_ : result_probs_;
    const int classes = static_cast<int>(probs.cols());
    T loss = 0;
    for (size_t b = 0; b < batch_.size(); ++b) {
      const int y = batch_[b]->label_id;
      if (y < 0 || y >= classes) {
        throw ValidationError("instance " + batch_[b]->id + ": label id " +
                              std::to_string(y) + " outside the head range");
      }
      loss -= std::log(probs(static_cast<Eigen::Index>(b), y));
    }
    return loss / static_cast<T>(batch_.size());
  }

  void Backward(Head head, const ForwardOptions &options, std::span<T> grad) {
    const int h = cfg_.hidden;
    const int k = cfg_.num_labels;
    const Eigen::Index nb = static_cast<Eigen::Index>(batch_.size());
    g_ = grad.data();
    std::fill(grad.begin(), grad.end(), T(0));
    const T inv_b = T(1) / static_cast<T>(nb);

    Mat<T> dlabel_logits;
    if (head == Head::kResult) {
      Mat<T> dres = result_probs_;
      for (Eigen::Index b = 0; b < nb; ++b) dres(b, batch_[b]->label_id) -= 1;
      dres *= inv_b;
      G(layout_.ctrp_w, kNumResults, k).noalias() +=
          dres.transpose() * label_probs_;
      GV(layout_.ctrp_b, kNumResults) += dres.colwise().sum();
      Mat<T> dprobs = dres * M(layout_.ctrp_w, kNumResults, k);
      ColVec<T> dots = (dprobs.array() * label_probs_.array()).rowwise().sum();
      dlabel_logits =
          label_probs_.array() * (dprobs.colwise() - dots).array();
    } else {
      dlabel_logits = label_probs_;
      for (Eigen::Index b = 0; b < nb; ++b) {
        dlabel_logits(b, batch_[b]->label_id) -= 1;
      }
      dlabel_logits *= inv_b;
    }
    G(layout_.clm_w, k, h).noalias() += dlabel_logits.transpose() * cls_;
    GV(layout_.clm_b, k) += dlabel_logits.colwise().sum();
    if (!options.encoder_grad) return;

    Mat<T> dcls = dlabel_logits * M(layout_.clm_w, k, h);
    Mat<T> dx = Mat<T>::Zero(n_, h);
    for (Eigen::Index b = 0; b < nb; ++b) dx.row(offsets_[b]) = dcls.row(b);

    for (int l = cfg_.layers - 1; l >= 0; --l) {
      dx = LayerBackward(layout_.layers[l], caches_[l], dx);
    }
    if (emb_mask_.size() > 0) dx.array() *= emb_mask_.array();
    Mat<T> de = LayerNormBackward<T>(dx, emb_ln_, p_ + layout_.emb_ln_g,
                                     g_ + layout_.emb_ln_g,
                                     g_ + layout_.emb_ln_b);
    MutMap<T> dtok = G(layout_.tok_emb, cfg_.vocab_size, h);
    MutMap<T> dpos = G(layout_.pos_emb, cfg_.max_len, h);
    MutMap<T> dseg = G(layout_.seg_emb, 2, h);
    for (size_t b = 0; b < batch_.size(); ++b) {
      const EncodedInstance &inst = *batch_[b];
      for (int i = 0; i < lengths_[b]; ++i) {
        const auto row = de.row(offsets_[b] + i);
        dtok.row(inst.token_ids[i]) += row;
        dpos.row(i) += row;
        dseg.row(inst.segment_ids[i]) += row;
      }
    }
  }

  void Export(BatchOutput<T> *out) {
    out->hidden = hidden_;
    out->offsets = offsets_;
    out->cls = cls_;
    out->label_probs = label_probs_;
    out->result_probs = result_probs_;
  }

 private:
  MutMap<T> G(size_t offset, int rows, int cols) {
    return MutMap<T>(g_ + offset, rows, cols);
  }
  MutRowMap<T> GV(size_t offset, int cols) {
    return MutRowMap<T>(g_ + offset, cols);
  }

  void LayerForward(const ParamLayout::Layer &w, double p,
                    std::mt19937_64 &rng, Mat<T> *x, LayerCache<T> *c) {
    const int h = cfg_.hidden;
    const int heads = cfg_.heads;
    const int dh = cfg_.head_dim();
    const T scale = T(1) / std::sqrt(static_cast<T>(dh));
    c->x = *x;
    c->q.noalias() = *x * M(w.wq, h, h);
    c->q.rowwise() += V(w.bq, h);
    c->k.noalias() = *x * M(w.wk, h, h);
    c->k.rowwise() += V(w.bk, h);
    c->v.noalias() = *x * M(w.wv, h, h);
    c->v.rowwise() += V(w.bv, h);
    c->ctx.setZero(n_, h);
    c->probs.resize(batch_.size() * heads);
    for (size_t b = 0; b < batch_.size(); ++b) {
      const int off = offsets_[b];
      const int len = lengths_[b];
      const EncodedInstance &inst = *batch_[b];
      for (int a = 0; a < heads; ++a) {
        Mat<T> &s = c->probs[b * heads + a];
        s.noalias() = c->q.block(off, a * dh, len, dh) *
                      c->k.block(off, a * dh, len, dh).transpose();
        s *= scale;
        for (int j = 0; j < len; ++j) {
          if (inst.token_ids[j] == Tokenizer::kPad) {
            s.col(j).setConstant(std::numeric_limits<T>::lowest());
          }
        }
        SoftmaxRows(&s);
        c->ctx.block(off, a * dh, len, dh).noalias() =
            s * c->v.block(off, a * dh, len, dh);
      }
    }
    Mat<T> attn = c->ctx * M(w.wo, h, h);
    attn.rowwise() += V(w.bo, h);
    if (p > 0) {
      c->attn_mask = DropoutMask<T>(n_, h, p, rng);
      attn.array() *= c->attn_mask.array();
    } else {
      c->attn_mask.resize(0, 0);
    }
    Mat<T> u = *x + attn;
    LayerNormForward<T>(u, p_ + w.ln1_g, p_ + w.ln1_b, &c->h1, &c->ln1);

    const int ff = cfg_.ff_dim;
    c->a1.noalias() = c->h1 * M(w.w1, h, ff);
    c->a1.rowwise() += V(w.b1, ff);
    c->f = c->a1.unaryExpr([](T v) { return Gelu(v); });
    Mat<T> g = c->f * M(w.w2, ff, h);
    g.rowwise() += V(w.b2, h);
    if (p > 0) {
      c->ff_mask = DropoutMask<T>(n_, h, p, rng);
      g.array() *= c->ff_mask.array();
    } else {
      c->ff_mask.resize(0, 0);
    }
    Mat<T> z = c->h1 + g;
    LayerNormForward<T>(z, p_ + w.ln2_g, p_ + w.ln2_b, x, &c->ln2);
  }

  Mat<T> LayerBackward(const ParamLayout::Layer &w, const LayerCache<T> &c,
                       const Mat<T> &dout) {
    const int h = cfg_.hidden;
    const int ff = cfg_.ff_dim;
    const int heads = cfg_.heads;
    const int dh = cfg_.head_dim();
    const T scale = T(1) / std::sqrt(static_cast<T>(dh));

    Mat<T> dz =
        LayerNormBackward<T>(dout, c.ln2, p_ + w.ln2_g, g_ + w.ln2_g,
                             g_ + w.ln2_b);
    Mat<T> dg = dz;
    if (c.ff_mask.size() > 0) dg.array() *= c.ff_mask.array();
    G(w.w2, ff, h).noalias() += c.f.transpose() * dg;
    GV(w.b2, h) += dg.colwise().sum();
    Mat<T> da1 = dg * M(w.w2, ff, h).transpose();
    da1.array() *= c.a1.unaryExpr([](T v) { return GeluGrad(v); }).array();
    G(w.w1, h, ff).noalias() += c.h1.transpose() * da1;
    GV(w.b1, ff) += da1.colwise().sum();
    Mat<T> dh1 = dz;
    dh1.noalias() += da1 * M(w.w1, h, ff).transpose();

    Mat<T> du = LayerNormBackward<T>(dh1, c.ln1, p_ + w.ln1_g, g_ + w.ln1_g,
                                     g_ + w.ln1_b);
    Mat<T> dattn = du;
    if (c.attn_mask.size() > 0) dattn.array() *= c.attn_mask.array();
    G(w.wo, h, h).noalias() += c.ctx.transpose() * dattn;
    GV(w.bo, h) += dattn.colwise().sum();
    Mat<T> dctx = dattn * M(w.wo, h, h).transpose();

    Mat<T> dq = Mat<T>::Zero(n_, h);
    Mat<T> dk = Mat<T>::Zero(n_, h);
    Mat<T> dv = Mat<T>::Zero(n_, h);
    for (size_t b = 0; b < batch_.size(); ++b) {
      const int off = offsets_[b];
      const int len = lengths_[b];
      for (int a = 0; a < heads; ++a) {
        const Mat<T> &prob = c.probs[b * heads + a];
        auto dctx_blk = dctx.block(off, a * dh, len, dh);
        Mat<T> dp = dctx_blk * c.v.block(off, a * dh, len, dh).transpose();
        dv.block(off, a * dh, len, dh).noalias() +=
            prob.transpose() * dctx_blk;
        ColVec<T> dots = (dp.array() * prob.array()).rowwise().sum();
        Mat<T> ds = prob.array() * (dp.colwise() - dots).array();
        ds *= scale;
        dq.block(off, a * dh, len, dh).noalias() +=
            ds * c.k.block(off, a * dh, len, dh);
        dk.block(off, a * dh, len, dh).noalias() +=
            ds.transpose() * c.q.block(off, a * dh, len, dh);
      }
    }
    G(w.wq, h, h).noalias() += c.x.transpose() * dq;
    GV(w.bq, h) += dq.colwise().sum();
    G(w.wk, h, h).noalias() += c.x.transpose() * dk;
    GV(w.bk, h) += dk.colwise().sum();
    G(w.wv, h, h).noalias() += c.x.transpose() * dv;
    GV(w.bv, h) += dv.colwise().sum();
    Mat<T> dx = du;
    dx.noalias() += dq * M(w.wq, h, h).transpose();
    dx.noalias() += dk * M(w.wk, h, h).transpose();
    dx.noalias() += dv * M(w.wv, h, h).transpose();
    return dx;
  }

  const ParamLayout &layout_;
  const ModelConfig &cfg_;
  const T *p_;
  T *g_ = nullptr;
  std::span<const EncodedInstance *const> batch_;
  std::vector<int> offsets_;
  std::vector<int> lengths_;
  int n_ = 0;

  LayerNormCache<T> emb_ln_;
  Mat<T> emb_mask_;
  std::vector<LayerCache<T>> caches_;
  Mat<T> hidden_;
  Mat<T> cls_;
  Mat<T> label_probs_;
  Mat<T> result_probs_;
};

}  // namespace

template <typename T>
T ComputeLoss(const ParamLayout &layout, std::span<const T> params,
              std::span<const EncodedInstance *const> batch, Head head,
              const ForwardOptions &options, std::span<T> grad,
              BatchOutput<T> *out) {
  if (batch.empty()) throw ValidationError("empty batch");
  Pass<T> pass(layout, params, batch);
  const bool backward = !grad.empty();
  if (backward && grad.size() != layout.size()) {
    throw ValidationError("gradient vector size does not match layout");
  }
  pass.Forward(options, backward);
  const T loss = pass.Loss(head);
  if (!std::isfinite(static_cast<double>(loss))) {
    throw NumericError("non-finite loss in batch starting with instance " +
                       batch.front()->id);
  }
  if (backward) pass.Backward(head, options, grad);
  if (out != nullptr) pass.Export(out);
  return loss;
}

template <typename T>
BatchOutput<T> Forward(const ParamLayout &layout, std::span<const T> params,
                       std::span<const EncodedInstance *const> batch) {
  BatchOutput<T> out;
  if (batch.empty()) return out;
  Pass<T> pass(layout, params, batch);
  pass.Forward(ForwardOptions(), /*keep_cache=*/false);
  pass.Export(&out);
  return out;
}

template float ComputeLoss<float>(const ParamLayout &, std::span<const float>,
                                  std::span<const EncodedInstance *const>,
                                  Head, const ForwardOptions &,
                                  std::span<float>, BatchOutput<float> *);
template double ComputeLoss<double>(const ParamLayout &,
                                    std::span<const double>,
                                    std::span<const EncodedInstance *const>,
                                    Head, const ForwardOptions &,
                                    std::span<double>, BatchOutput<double> *);
template BatchOutput<float> Forward<float>(
    const ParamLayout &, std::span<const float>,
    std::span<const EncodedInstance *const>);
template BatchOutput<double> Forward<double>(
    const ParamLayout &, std::span<const double>,
    std::span<const EncodedInstance *const>);

ParamVector InitParams(const ParamLayout &layout, uint64_t seed) {
  ParamVector params(layout.size(), 0.0f);
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> normal(0.0f, 0.02f);
  for (const TensorInfo &t : layout.tensors()) {
    float *p = params.data() + t.offset;
    const bool gain = t.name.ends_with("_g");
    const bool bias = t.rows == 1 && !gain;
    for (size_t i = 0; i < t.size(); ++i) {
      if (gain) {
        p[i] = 1.0f;
      } else if (!bias) {
        p[i] = normal(rng);
      }
    }
  }
  return params;
}

Model::Model(const ModelConfig &config, uint64_t seed)
    : layout_(config), params_(InitParams(layout_, seed)) {}

Model::Model(const ModelConfig &config, ParamVector params)
    : layout_(config), params_(std::move(params)) {
  if (params_.size() != layout_.size()) {
    throw ValidationError("parameter count " + std::to_string(params_.size()) +
                          " does not match the configuration (" +
                          std::to_string(layout_.size()) + ")");
  }
}

}  // namespace ctrp
