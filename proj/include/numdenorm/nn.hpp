// Copyright 2026 The numdenorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMDENORM_NN_HPP
#define NUMDENORM_NN_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "numdenorm/graph.hpp"
#include "numdenorm/tensor.hpp"

namespace numdenorm::nn {

// Parameter names for one GRU cell under a common prefix. Gates follow the
// update (z) / reset (r) / candidate (n) layout:
//   z = sigmoid(Wz x + Uz h + bz)
//   r = sigmoid(Wr x + Ur h + br)
//   n = tanh(Wn x + Un (r*h) + bn)
//   h' = (1 - z) * n + z * h
struct GruCell {
  std::string prefix;
  std::int64_t input_dim = 0;
  std::int64_t hidden_dim = 0;

  std::string wz() const { return prefix + ".wz"; }
  std::string uz() const { return prefix + ".uz"; }
  std::string bz() const { return prefix + ".bz"; }
  std::string wr() const { return prefix + ".wr"; }
  std::string ur() const { return prefix + ".ur"; }
  std::string br() const { return prefix + ".br"; }
  std::string wn() const { return prefix + ".wn"; }
  std::string un() const { return prefix + ".un"; }
  std::string bn() const { return prefix + ".bn"; }

  std::int64_t param_count() const { return 3 * (hidden_dim * input_dim + hidden_dim * hidden_dim + hidden_dim); }
};

template <typename T>
GruCell make_gru(ParameterStore<T>& store, const std::string& prefix, std::int64_t input_dim,
                 std::int64_t hidden_dim, std::mt19937_64& rng) {
  GruCell c{prefix, input_dim, hidden_dim};
  store.add(c.wz(), glorot_uniform<T>(hidden_dim, input_dim, rng));
  store.add(c.uz(), glorot_uniform<T>(hidden_dim, hidden_dim, rng));
  store.add(c.bz(), zeros<T>({hidden_dim}));
  store.add(c.wr(), glorot_uniform<T>(hidden_dim, input_dim, rng));
  store.add(c.ur(), glorot_uniform<T>(hidden_dim, hidden_dim, rng));
  store.add(c.br(), zeros<T>({hidden_dim}));
  store.add(c.wn(), glorot_uniform<T>(hidden_dim, input_dim, rng));
  store.add(c.un(), glorot_uniform<T>(hidden_dim, hidden_dim, rng));
  store.add(c.bn(), zeros<T>({hidden_dim}));
  return c;
}

// One GRU update on the tape. h_prev and x are graph nodes.
template <typename T>
typename Graph<T>::Id gru_step(Graph<T>& g, const ParameterStore<T>& store, const GruCell& cell,
                               typename Graph<T>::Id h_prev, typename Graph<T>::Id x) {
  using Id = typename Graph<T>::Id;
  if (g.value(x).numel() != cell.input_dim || g.value(h_prev).numel() != cell.hidden_dim)
    throw ShapeMismatch("gru_step: shapes do not match cell dims");
  Id z = g.sigmoid(g.add(g.add(g.matvec(g.param(store, cell.wz()), x),
                               g.matvec(g.param(store, cell.uz()), h_prev)),
                         g.param(store, cell.bz())));
  Id r = g.sigmoid(g.add(g.add(g.matvec(g.param(store, cell.wr()), x),
                               g.matvec(g.param(store, cell.ur()), h_prev)),
                         g.param(store, cell.br())));
  Id n = g.tanh_op(g.add(g.add(g.matvec(g.param(store, cell.wn()), x),
                               g.matvec(g.param(store, cell.un()), g.mul(r, h_prev))),
                         g.param(store, cell.bn())));
  return g.add(g.mul(g.one_minus(z), n), g.mul(z, h_prev));
}

// Runs forward and backward cells over a sequence; output i is
// [forward_state_i ; backward_state_i], width 2 * hidden_dim.
template <typename T>
std::vector<typename Graph<T>::Id> birnn_encode(Graph<T>& g, const ParameterStore<T>& store,
                                                const GruCell& fwd, const GruCell& bwd,
                                                const std::vector<typename Graph<T>::Id>& xs) {
  using Id = typename Graph<T>::Id;
  if (xs.empty()) throw EmptySequence("birnn_encode: empty sequence");
  const std::size_t n = xs.size();
  std::vector<Id> fstates(n), bstates(n);
  Id h = g.input(zeros<T>({fwd.hidden_dim}));
  for (std::size_t i = 0; i < n; ++i) {
    h = gru_step(g, store, fwd, h, xs[i]);
    fstates[i] = h;
  }
  h = g.input(zeros<T>({bwd.hidden_dim}));
  for (std::size_t i = n; i-- > 0;) {
    h = gru_step(g, store, bwd, h, xs[i]);
    bstates[i] = h;
  }
  std::vector<Id> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = g.concat(fstates[i], bstates[i]);
  return out;
}

// Additive attention: e_j = v . tanh(Wq q + Wk k_j + b); weights = softmax(e);
// context = sum_j weights_j * value_j.
struct AttentionParams {
  std::string prefix;
  std::int64_t query_dim = 0;
  std::int64_t key_dim = 0;
  std::int64_t attn_dim = 0;

  std::string wq() const { return prefix + ".wq"; }
  std::string wk() const { return prefix + ".wk"; }
  std::string b() const { return prefix + ".b"; }
  std::string v() const { return prefix + ".v"; }

  std::int64_t param_count() const {
    return attn_dim * query_dim + attn_dim * key_dim + attn_dim + attn_dim;
  }
};

template <typename T>
AttentionParams make_attention(ParameterStore<T>& store, const std::string& prefix,
                               std::int64_t query_dim, std::int64_t key_dim,
                               std::int64_t attn_dim, std::mt19937_64& rng) {
  AttentionParams a{prefix, query_dim, key_dim, attn_dim};
  store.add(a.wq(), glorot_uniform<T>(attn_dim, query_dim, rng));
  store.add(a.wk(), glorot_uniform<T>(attn_dim, key_dim, rng));
  store.add(a.b(), zeros<T>({attn_dim}));
  store.add(a.v(), glorot_uniform<T>(attn_dim, 1, rng));
  return a;
}

template <typename T>
struct AttentionResult {
  typename Graph<T>::Id context;
  typename Graph<T>::Id weights;
};

template <typename T>
AttentionResult<T> additive_attention(Graph<T>& g, const ParameterStore<T>& store,
                                      const AttentionParams& attn, typename Graph<T>::Id query,
                                      const std::vector<typename Graph<T>::Id>& keys,
                                      const std::vector<typename Graph<T>::Id>& values) {
  using Id = typename Graph<T>::Id;
  if (keys.empty() || keys.size() != values.size())
    throw EmptySequence("additive_attention: needs >= 1 key and matching values");
  Id wq = g.param(store, attn.wq());
  Id wk = g.param(store, attn.wk());
  Id b = g.param(store, attn.b());
  Id v = g.param(store, attn.v());
  Id q_proj = g.add(g.matvec(wq, query), b);
  std::vector<Id> scores(keys.size());
  for (std::size_t j = 0; j < keys.size(); ++j) {
    Id e = g.tanh_op(g.add(q_proj, g.matvec(wk, keys[j])));
    scores[j] = g.dot(v, e);
  }
  Id weights = g.softmax(g.stack(scores));
  Id context = g.weighted_sum(weights, values);
  return {context, weights};
}

// --- Adam ------------------------------------------------------------------

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double grad_clip = 0.0;  // 0 disables global-norm clipping
};

template <typename T>
class Adam {
 public:
  explicit Adam(AdamConfig config = {}) : config_(config) {}

  const AdamConfig& config() const { return config_; }

  // One update over every parameter in the store from its gradient slot.
  void step(ParameterStore<T>& store) {
    if (!store.grads_populated())
      throw MissingGradients("optimizer_step: gradients were never populated");
    ++t_;
    double clip_scale = 1.0;
    if (config_.grad_clip > 0.0) {
      double norm_sq = 0.0;
      for (auto& e : store.entries())
        for (T gv : e.grad.data) norm_sq += static_cast<double>(gv) * static_cast<double>(gv);
      const double norm = std::sqrt(norm_sq);
      if (norm > config_.grad_clip) clip_scale = config_.grad_clip / norm;
    }
    const double bc1 = 1.0 - std::pow(config_.beta1, t_);
    const double bc2 = 1.0 - std::pow(config_.beta2, t_);
    for (auto& e : store.entries()) {
      auto& slot = state_[e.name];
      if (slot.m.data.empty()) {
        slot.m = Tensor<T>(e.value.shape);
        slot.v = Tensor<T>(e.value.shape);
      }
      for (std::size_t i = 0; i < e.value.data.size(); ++i) {
        const double gi = static_cast<double>(e.grad.data[i]) * clip_scale;
        double m = config_.beta1 * static_cast<double>(slot.m.data[i]) + (1.0 - config_.beta1) * gi;
        double v = config_.beta2 * static_cast<double>(slot.v.data[i]) + (1.0 - config_.beta2) * gi * gi;
        slot.m.data[i] = static_cast<T>(m);
        slot.v.data[i] = static_cast<T>(v);
        const double update = config_.lr * (m / bc1) / (std::sqrt(v / bc2) + config_.eps);
        e.value.data[i] -= static_cast<T>(update);
      }
    }
  }

  std::int64_t steps_taken() const { return t_; }

 private:
  struct Slot {
    Tensor<T> m, v;
  };
  AdamConfig config_;
  std::map<std::string, Slot> state_;
  std::int64_t t_ = 0;
};

}  // namespace numdenorm::nn

#endif  // NUMDENORM_NN_HPP
