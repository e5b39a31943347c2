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

#ifndef NUMDENORM_GRAPH_HPP
#define NUMDENORM_GRAPH_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "numdenorm/errors.hpp"
#include "numdenorm/kernels.hpp"
#include "numdenorm/tensor.hpp"

namespace numdenorm::nn {

// Named parameter tensors plus gradient slots. Insertion order is preserved
// so optimizer updates and checkpoints are deterministic.
template <typename T>
class ParameterStore {
 public:
  struct Entry {
    std::string name;
    Tensor<T> value;
    Tensor<T> grad;
  };

  Tensor<T>& add(const std::string& name, Tensor<T> value) {
    if (index_.count(name)) throw Error("duplicate parameter name: " + name);
    index_[name] = entries_.size();
    entries_.push_back(Entry{name, std::move(value), {}});
    Entry& e = entries_.back();
    e.grad = Tensor<T>(e.value.shape);
    return e.value;
  }

  bool has(const std::string& name) const { return index_.count(name) != 0; }

  Entry& entry(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown parameter: " + name);
    return entries_[it->second];
  }
  const Entry& entry(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown parameter: " + name);
    return entries_[it->second];
  }

  Tensor<T>& value(const std::string& name) { return entry(name).value; }
  const Tensor<T>& value(const std::string& name) const { return entry(name).value; }
  Tensor<T>& grad(const std::string& name) { return entry(name).grad; }

  std::vector<Entry>& entries() { return entries_; }
  const std::vector<Entry>& entries() const { return entries_; }

  void zero_grads() {
    for (auto& e : entries_) e.grad.zero();
    grads_populated_ = true;
  }

  std::int64_t total_params() const {
    std::int64_t n = 0;
    for (const auto& e : entries_) n += e.value.numel();
    return n;
  }

  bool grads_populated() const { return grads_populated_; }
  void mark_grads_populated() { grads_populated_ = true; }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
  bool grads_populated_ = false;
};

// Define-by-run reverse-mode tape over Tensor<T>. One Graph per forward
// pass; parameters are referenced read-only, so concurrent inference
// graphs over one store are safe.
template <typename T>
class Graph {
 public:
  using Id = std::int32_t;

  Id input(Tensor<T> value) {
    return push(std::move(value), {}, nullptr, /*needs_grad=*/false);
  }

  Id param(const ParameterStore<T>& store, const std::string& name) {
    const auto& e = store.entry(name);
    Id id = push(Tensor<T>(), {}, nullptr, /*needs_grad=*/true);
    nodes_[static_cast<std::size_t>(id)].value_ref = &e.value;
    nodes_[static_cast<std::size_t>(id)].param_name = name;
    return id;
  }

  const Tensor<T>& value(Id id) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    return n.value_ref ? *n.value_ref : n.value;
  }

  const Tensor<T>& grad(Id id) const { return nodes_[static_cast<std::size_t>(id)].grad; }

  // --- ops -----------------------------------------------------------------

  Id lookup_row(Id matrix, std::int64_t row) {
    const Tensor<T>& m = value(matrix);
    if (row < 0 || row >= m.rows()) throw IndexOutOfRange("lookup_row: row out of range");
    const std::int64_t c = m.cols();
    Tensor<T> out({c});
    for (std::int64_t j = 0; j < c; ++j) out.at(j) = m.at(row, j);
    return push(std::move(out), {matrix}, [row, c](Graph& g, Node& n) {
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      for (std::int64_t j = 0; j < c; ++j) pg.at(row, j) += n.grad.at(j);
    });
  }

  Id matvec(Id w, Id x) {
    const Tensor<T>& wm = value(w);
    const Tensor<T>& xv = value(x);
    if (wm.shape.size() != 2 || wm.cols() != xv.numel())
      throw ShapeMismatch("matvec: incompatible shapes");
    const std::size_t rows = static_cast<std::size_t>(wm.rows());
    const std::size_t cols = static_cast<std::size_t>(wm.cols());
    Tensor<T> out({wm.rows()});
    kernels::matvec(wm.data.data(), xv.data.data(), out.data.data(), rows, cols);
    return push(std::move(out), {w, x}, [rows, cols](Graph& g, Node& n) {
      const Tensor<T>& gout = n.grad;
      const Tensor<T>& wv = g.value(n.parents[0]);
      const Tensor<T>& xv2 = g.value(n.parents[1]);
      if (g.needs_grad(n.parents[0])) {
        Tensor<T>& gw = g.ensure_grad(n.parents[0]);
        kernels::ger_acc(gw.data.data(), gout.data.data(), xv2.data.data(), rows, cols);
      }
      if (g.needs_grad(n.parents[1])) {
        Tensor<T>& gx = g.ensure_grad(n.parents[1]);
        kernels::matvec_t_acc(wv.data.data(), gout.data.data(), gx.data.data(), rows, cols);
      }
    });
  }

  Id add(Id a, Id b) {
    const Tensor<T>& av = value(a);
    const Tensor<T>& bv = value(b);
    if (!av.same_shape(bv)) throw ShapeMismatch("add: shape mismatch");
    Tensor<T> out = av;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += bv.data[i];
    return push(std::move(out), {a, b}, [](Graph& g, Node& n) {
      for (Id p : n.parents)
        if (g.needs_grad(p)) {
          Tensor<T>& pg = g.ensure_grad(p);
          kernels::axpy(T(1), n.grad.data.data(), pg.data.data(), pg.data.size());
        }
    });
  }

  Id mul(Id a, Id b) {
    const Tensor<T>& av = value(a);
    const Tensor<T>& bv = value(b);
    if (!av.same_shape(bv)) throw ShapeMismatch("mul: shape mismatch");
    Tensor<T> out = av;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] *= bv.data[i];
    return push(std::move(out), {a, b}, [](Graph& g, Node& n) {
      const Tensor<T>& av2 = g.value(n.parents[0]);
      const Tensor<T>& bv2 = g.value(n.parents[1]);
      if (g.needs_grad(n.parents[0])) {
        Tensor<T>& ga = g.ensure_grad(n.parents[0]);
        for (std::size_t i = 0; i < ga.data.size(); ++i) ga.data[i] += n.grad.data[i] * bv2.data[i];
      }
      if (g.needs_grad(n.parents[1])) {
        Tensor<T>& gb = g.ensure_grad(n.parents[1]);
        for (std::size_t i = 0; i < gb.data.size(); ++i) gb.data[i] += n.grad.data[i] * av2.data[i];
      }
    });
  }

  Id scale(Id a, T alpha) {
    Tensor<T> out = value(a);
    for (auto& v : out.data) v *= alpha;
    return push(std::move(out), {a}, [alpha](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      kernels::axpy(alpha, n.grad.data.data(), pg.data.data(), pg.data.size());
    });
  }

  Id one_minus(Id a) {
    Tensor<T> out = value(a);
    for (auto& v : out.data) v = T(1) - v;
    return push(std::move(out), {a}, [](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      kernels::axpy(T(-1), n.grad.data.data(), pg.data.data(), pg.data.size());
    });
  }

  Id sigmoid(Id a) {
    Tensor<T> out = value(a);
    for (auto& v : out.data) v = T(1) / (T(1) + std::exp(-v));
    return push(std::move(out), {a}, [](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      for (std::size_t i = 0; i < pg.data.size(); ++i) {
        const T s = n.value.data[i];
        pg.data[i] += n.grad.data[i] * s * (T(1) - s);
      }
    });
  }

  Id tanh_op(Id a) {
    Tensor<T> out = value(a);
    for (auto& v : out.data) v = std::tanh(v);
    return push(std::move(out), {a}, [](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      for (std::size_t i = 0; i < pg.data.size(); ++i) {
        const T t = n.value.data[i];
        pg.data[i] += n.grad.data[i] * (T(1) - t * t);
      }
    });
  }

  Id concat(Id a, Id b) {
    const Tensor<T>& av = value(a);
    const Tensor<T>& bv = value(b);
    Tensor<T> out({av.numel() + bv.numel()});
    std::copy(av.data.begin(), av.data.end(), out.data.begin());
    std::copy(bv.data.begin(), bv.data.end(),
              out.data.begin() + static_cast<std::ptrdiff_t>(av.data.size()));
    const std::size_t na = av.data.size();
    return push(std::move(out), {a, b}, [na](Graph& g, Node& n) {
      if (g.needs_grad(n.parents[0])) {
        Tensor<T>& ga = g.ensure_grad(n.parents[0]);
        for (std::size_t i = 0; i < na; ++i) ga.data[i] += n.grad.data[i];
      }
      if (g.needs_grad(n.parents[1])) {
        Tensor<T>& gb = g.ensure_grad(n.parents[1]);
        for (std::size_t i = 0; i < gb.data.size(); ++i) gb.data[i] += n.grad.data[na + i];
      }
    });
  }

  Id dot(Id a, Id b) {
    const Tensor<T>& av = value(a);
    const Tensor<T>& bv = value(b);
    if (av.numel() != bv.numel()) throw ShapeMismatch("dot: length mismatch");
    T acc = T(0);
    for (std::size_t i = 0; i < av.data.size(); ++i) acc += av.data[i] * bv.data[i];
    Tensor<T> out({1});
    out.at(0) = acc;
    return push(std::move(out), {a, b}, [](Graph& g, Node& n) {
      const T g0 = n.grad.at(0);
      const Tensor<T>& av2 = g.value(n.parents[0]);
      const Tensor<T>& bv2 = g.value(n.parents[1]);
      if (g.needs_grad(n.parents[0])) {
        Tensor<T>& ga = g.ensure_grad(n.parents[0]);
        kernels::axpy(g0, bv2.data.data(), ga.data.data(), ga.data.size());
      }
      if (g.needs_grad(n.parents[1])) {
        Tensor<T>& gb = g.ensure_grad(n.parents[1]);
        kernels::axpy(g0, av2.data.data(), gb.data.data(), gb.data.size());
      }
    });
  }

  // Stacks scalar nodes into one vector.
  Id stack(const std::vector<Id>& scalars) {
    if (scalars.empty()) throw EmptySequence("stack: no inputs");
    Tensor<T> out({static_cast<std::int64_t>(scalars.size())});
    for (std::size_t i = 0; i < scalars.size(); ++i) out.at(static_cast<std::int64_t>(i)) = value(scalars[i]).at(0);
    return push(std::move(out), scalars, [](Graph& g, Node& n) {
      for (std::size_t i = 0; i < n.parents.size(); ++i)
        if (g.needs_grad(n.parents[i])) g.ensure_grad(n.parents[i]).at(0) += n.grad.data[i];
    });
  }

  Id softmax(Id v) {
    Tensor<T> out = value(v);
    T mx = out.data[0];
    for (T x : out.data) mx = std::max(mx, x);
    T sum = T(0);
    for (auto& x : out.data) {
      x = std::exp(x - mx);
      sum += x;
    }
    for (auto& x : out.data) x /= sum;
    return push(std::move(out), {v}, [](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      T sg = T(0);
      for (std::size_t i = 0; i < n.value.data.size(); ++i) sg += n.value.data[i] * n.grad.data[i];
      for (std::size_t i = 0; i < pg.data.size(); ++i)
        pg.data[i] += n.value.data[i] * (n.grad.data[i] - sg);
    });
  }

  // out = sum_j weights[j] * values[j]
  Id weighted_sum(Id weights, const std::vector<Id>& values_in) {
    const Tensor<T>& w = value(weights);
    if (static_cast<std::size_t>(w.numel()) != values_in.size())
      throw ShapeMismatch("weighted_sum: arity mismatch");
    Tensor<T> out = value(values_in[0]);
    for (auto& x : out.data) x *= w.at(0);
    for (std::size_t j = 1; j < values_in.size(); ++j) {
      const Tensor<T>& vj = value(values_in[j]);
      kernels::axpy(w.at(static_cast<std::int64_t>(j)), vj.data.data(), out.data.data(),
                    out.data.size());
    }
    std::vector<Id> parents = values_in;
    parents.insert(parents.begin(), weights);
    return push(std::move(out), parents, [](Graph& g, Node& n) {
      const Id wid = n.parents[0];
      const Tensor<T>& w2 = g.value(wid);
      for (std::size_t j = 1; j < n.parents.size(); ++j) {
        const Id vid = n.parents[j];
        const Tensor<T>& vj = g.value(vid);
        if (g.needs_grad(wid)) {
          T acc = T(0);
          for (std::size_t i = 0; i < vj.data.size(); ++i) acc += n.grad.data[i] * vj.data[i];
          g.ensure_grad(wid).at(static_cast<std::int64_t>(j - 1)) += acc;
        }
        if (g.needs_grad(vid)) {
          Tensor<T>& gv = g.ensure_grad(vid);
          kernels::axpy(w2.at(static_cast<std::int64_t>(j - 1)), n.grad.data.data(),
                        gv.data.data(), gv.data.size());
        }
      }
    });
  }

  // -log softmax(logits)[target], max-subtracted for stability.
  Id cross_entropy(Id logits, std::int64_t target) {
    const Tensor<T>& lv = value(logits);
    if (target < 0 || target >= lv.numel())
      throw IndexOutOfRange("cross_entropy: target out of range");
    T mx = lv.data[0];
    for (T x : lv.data) mx = std::max(mx, x);
    T sum = T(0);
    for (T x : lv.data) sum += std::exp(x - mx);
    Tensor<T> out({1});
    out.at(0) = std::log(sum) + mx - lv.at(target);
    return push(std::move(out), {logits}, [target, mx](Graph& g, Node& n) {
      if (!g.needs_grad(n.parents[0])) return;
      const Tensor<T>& lv2 = g.value(n.parents[0]);
      Tensor<T>& pg = g.ensure_grad(n.parents[0]);
      T sum2 = T(0);
      for (T x : lv2.data) sum2 += std::exp(x - mx);
      const T g0 = n.grad.at(0);
      for (std::int64_t i = 0; i < lv2.numel(); ++i) {
        T p = std::exp(lv2.at(i) - mx) / sum2;
        pg.at(i) += g0 * (p - (i == target ? T(1) : T(0)));
      }
    });
  }

  // --- backward ------------------------------------------------------------

  void backward(Id root) {
    Node& r = nodes_[static_cast<std::size_t>(root)];
    if (value(root).numel() != 1) throw ShapeMismatch("backward: root must be scalar");
    ensure_grad(root).at(0) = T(1);
    (void)r;
    for (std::int64_t i = static_cast<std::int64_t>(nodes_.size()) - 1; i >= 0; --i) {
      Node& n = nodes_[static_cast<std::size_t>(i)];
      if (n.grad.data.empty() || !n.backward_fn) continue;
      n.backward_fn(*this, n);
    }
  }

  // Adds parameter-node gradients into the store. Unreached parameters keep
  // whatever the store already holds (zero after zero_grads()).
  void flush_grads(ParameterStore<T>& store) {
    for (auto& n : nodes_) {
      if (n.param_name.empty() || n.grad.data.empty()) continue;
      Tensor<T>& slot = store.grad(n.param_name);
      kernels::axpy(T(1), n.grad.data.data(), slot.data.data(), slot.data.size());
    }
    store.mark_grads_populated();
  }

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor<T> value;                  // owned (empty for params)
    const Tensor<T>* value_ref = nullptr;  // set for params
    Tensor<T> grad;                   // lazily allocated
    std::vector<Id> parents;
    std::function<void(Graph&, Node&)> backward_fn;
    bool needs_grad = false;
    std::string param_name;
  };

  bool needs_grad(Id id) const { return nodes_[static_cast<std::size_t>(id)].needs_grad; }

  Tensor<T>& ensure_grad(Id id) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.grad.data.empty()) n.grad = Tensor<T>(value(id).shape);
    return n.grad;
  }

  Id push(Tensor<T> value_in, std::vector<Id> parents,
          std::function<void(Graph&, Node&)> backward_fn, bool needs_grad_leaf = false) {
    Node n;
    n.value = std::move(value_in);
    n.parents = std::move(parents);
    n.backward_fn = std::move(backward_fn);
    n.needs_grad = needs_grad_leaf;
    // Acyclic by construction: parents always precede children.
    for (Id p : n.parents) {
      assert(p >= 0 && static_cast<std::size_t>(p) < nodes_.size());
      if (nodes_[static_cast<std::size_t>(p)].needs_grad) n.needs_grad = true;
    }
    nodes_.push_back(std::move(n));
    return static_cast<Id>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
};

}  // namespace numdenorm::nn

#endif  // NUMDENORM_GRAPH_HPP
