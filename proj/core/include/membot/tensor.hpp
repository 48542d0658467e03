#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace membot {

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

struct TensorData;

// Dense float-64 array participating in a dynamically recorded computation
// graph. Handles have value semantics; the payload is shared. Shape {} is a
// scalar, {d} a vector, {r, c} a row-major matrix.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  bool defined() const { return d_ != nullptr; }
  const Shape& shape() const;
  int rank() const;
  int dim(int i) const;
  int64_t numel() const;

  const std::vector<double>& value() const;
  std::vector<double>& value_mut();  // leaf in-place updates (optimizers, loading)
  double item() const;               // requires numel()==1

  bool requires_grad() const;
  bool is_leaf() const;  // not produced by a recorded operation
  bool has_grad() const;
  const std::vector<double>& grad() const;
  std::vector<double>& grad_buffer();  // allocates a zeroed buffer when absent
  void zero_grad();

  // Same values, detached from the graph, requires_grad=false.
  Tensor detach() const;

  TensorData* get() const { return d_.get(); }

 private:
  explicit Tensor(std::shared_ptr<TensorData> d) : d_(std::move(d)) {}
  std::shared_ptr<TensorData> d_;

  friend Tensor make_op_output(Shape, std::vector<double>, std::vector<Tensor>,
                               std::function<void(TensorData&)>);
};

struct TensorData {
  Shape shape;
  std::vector<double> value;
  bool requires_grad = false;
  std::vector<double> grad;  // empty until touched; numel-sized afterwards

  // Set only on tracked op outputs.
  std::vector<Tensor> parents;
  std::function<void(TensorData& self)> backprop;
};

// Disables graph recording in its scope (rollouts, bootstrap targets).
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

bool grad_enabled();

// Topologically ordered operation list below a root. Acyclic by construction
// (ops only reference previously built tensors); replaying it in reverse
// accumulates exact chain-rule gradients, summing contributions over every
// path when subexpressions are shared.
class Graph {
 public:
  static Graph trace(const Tensor& root);

  // Root must be scalar. Interior gradients are reset on every call; leaf
  // gradients accumulate across calls until zero_grad.
  void backward();

  const std::vector<Tensor>& order() const { return order_; }

 private:
  Tensor root_;
  std::vector<Tensor> order_;  // parents before children
};

void backward(const Tensor& loss);

// Low-level constructor used by ops: wires parents/backprop when gradient
// tracking is active for at least one parent.
Tensor make_op_output(Shape shape, std::vector<double> value,
                      std::vector<Tensor> parents,
                      std::function<void(TensorData&)> backprop);

}  // namespace membot
