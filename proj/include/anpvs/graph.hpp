#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "anpvs/tensor.hpp"

namespace anpvs {

// A value tracked by a compute graph. The tensor carries both the forward
// value and the gradient buffer filled in by Graph::backward.
struct VarData {
  Tensor t;
  bool requires_grad = false;
  std::uint64_t graph_stamp = 0;  // which graph last registered this var
};
using Var = std::shared_ptr<VarData>;

// Creates a graph-independent leaf (parameters live across many graphs).
Var make_leaf(Tensor t, bool requires_grad = true);

// Records operations eagerly; execution order is the topological order.
// backward() walks the record in reverse exactly once.
class Graph {
 public:
  Graph();

  Var leaf(Tensor t, bool requires_grad = true);
  Var constant(Tensor t);

  // --- network ops ---
  Var dense(const Var& input, const Var& weight, const Var& bias);
  Var conv2d(const Var& input, const Var& kernel, const Var& bias, int stride,
             int padding);
  Var maxpool2d(const Var& input, int window, int stride);
  Var relu(const Var& x);
  Var softmax_cross_entropy(const Var& logits, const std::vector<int>& labels);

  // --- elementwise (same shape) ---
  Var add(const Var& a, const Var& b);
  Var sub(const Var& a, const Var& b);
  Var mul(const Var& a, const Var& b);
  Var divide(const Var& a, const Var& b);

  // --- elementwise with scalar ---
  Var add_scalar(const Var& a, double c);
  Var mul_scalar(const Var& a, double c);

  // --- elementwise unary ---
  Var neg(const Var& a);
  Var exp(const Var& a);
  Var log(const Var& a);
  Var abs(const Var& a);
  Var square(const Var& a);
  Var sigmoid(const Var& a);
  Var softplus(const Var& a);
  Var digamma(const Var& a);
  // Pass-through gradient inside [lo, hi], zero outside.
  Var clamp(const Var& a, double lo, double hi);

  // --- reductions to scalar ---
  Var sum(const Var& a);
  Var mean(const Var& a);

  // Scales x[b, c, ...] by m[c]; m has one entry per channel/unit.
  Var channel_scale(const Var& x, const Var& m);

  // Fills grad buffers of every var recorded on this graph with
  // d(loss)/d(var). The graph is consumed afterwards.
  void backward(const Var& loss);

  bool consumed() const { return consumed_; }
  std::size_t size() const { return steps_.size(); }

 private:
  Var make_out(std::vector<int> shape, bool requires_grad);
  void touch(const Var& v);
  void record(std::function<void()> back);

  std::uint64_t id_;
  std::vector<std::function<void()>> steps_;
  std::vector<Var> registry_;
  bool consumed_ = false;
};

// Max over coordinates of |analytic - central difference| / max(1, |analytic|)
// for a scalar-valued tensor function.
double grad_check(const std::function<Var(Graph&, const Var&)>& f,
                  const Tensor& x, double h);

}  // namespace anpvs
