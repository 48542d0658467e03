#include "membot/tensor.hpp"

#include <sstream>
#include <unordered_set>

#include "membot/errors.hpp"

namespace membot {

int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int d : s) n *= d;
  return n;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << "x";
    os << s[i];
  }
  os << "]";
  return os.str();
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
  return from(std::move(shape), {}, requires_grad);
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
  auto n = shape_numel(shape);
  return from(std::move(shape), std::vector<double>(n, value), requires_grad);
}

Tensor Tensor::from(Shape shape, std::vector<double> data, bool requires_grad) {
  for (int d : shape) {
    if (d <= 0) throw DimensionError("tensor dims must be positive, got " + shape_str(shape));
  }
  auto n = shape_numel(shape);
  if (data.empty()) data.assign(n, 0.0);
  if (static_cast<int64_t>(data.size()) != n)
    throw DimensionError("data length " + std::to_string(data.size()) +
                         " does not match shape " + shape_str(shape));
  auto d = std::make_shared<TensorData>();
  d->shape = std::move(shape);
  d->value = std::move(data);
  d->requires_grad = requires_grad;
  return Tensor(std::move(d));
}

Tensor Tensor::scalar(double value, bool requires_grad) {
  return from({}, {value}, requires_grad);
}

const Shape& Tensor::shape() const { return d_->shape; }
int Tensor::rank() const { return static_cast<int>(d_->shape.size()); }
int Tensor::dim(int i) const { return d_->shape.at(i); }
int64_t Tensor::numel() const { return static_cast<int64_t>(d_->value.size()); }

const std::vector<double>& Tensor::value() const { return d_->value; }
std::vector<double>& Tensor::value_mut() { return d_->value; }

double Tensor::item() const {
  if (numel() != 1) throw ContractError("item() requires a scalar, got " + shape_str(shape()));
  return d_->value[0];
}

bool Tensor::requires_grad() const { return d_->requires_grad; }
bool Tensor::is_leaf() const { return d_->backprop == nullptr; }
bool Tensor::has_grad() const { return !d_->grad.empty(); }

const std::vector<double>& Tensor::grad() const {
  if (d_->grad.empty()) throw ContractError("tensor has no gradient");
  return d_->grad;
}

std::vector<double>& Tensor::grad_buffer() {
  if (d_->grad.empty()) d_->grad.assign(d_->value.size(), 0.0);
  return d_->grad;
}

void Tensor::zero_grad() {
  if (!d_->grad.empty()) std::fill(d_->grad.begin(), d_->grad.end(), 0.0);
}

Tensor Tensor::detach() const {
  auto d = std::make_shared<TensorData>();
  d->shape = d_->shape;
  d->value = d_->value;
  d->requires_grad = false;
  return Tensor(std::move(d));
}

namespace {
thread_local bool g_grad_enabled = true;
}

NoGradGuard::NoGradGuard() : prev_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = prev_; }
bool grad_enabled() { return g_grad_enabled; }

Tensor make_op_output(Shape shape, std::vector<double> value,
                      std::vector<Tensor> parents,
                      std::function<void(TensorData&)> backprop) {
  bool track = grad_enabled();
  bool any_rg = false;
  if (track) {
    for (const auto& p : parents) any_rg = any_rg || p.requires_grad();
  }
  Tensor out = Tensor::from(std::move(shape), std::move(value), track && any_rg);
  if (out.requires_grad()) {
    out.get()->parents = std::move(parents);
    out.get()->backprop = std::move(backprop);
  }
  return out;
}

Graph Graph::trace(const Tensor& root) {
  Graph g;
  g.root_ = root;
  if (!root.defined() || !root.requires_grad()) return g;

  // Iterative post-order DFS: parents land before children in the order.
  std::unordered_set<const TensorData*> visited;
  struct Frame {
    Tensor t;
    size_t next_parent = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({root});
  visited.insert(root.get());
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto& parents = f.t.get()->parents;
    bool descended = false;
    while (f.next_parent < parents.size()) {
      const Tensor& p = parents[f.next_parent++];
      if (p.requires_grad() && !visited.count(p.get())) {
        visited.insert(p.get());
        stack.push_back({p});
        descended = true;
        break;
      }
    }
    if (!descended && f.next_parent >= parents.size()) {
      g.order_.push_back(f.t);
      stack.pop_back();
    }
  }
  return g;
}

void Graph::backward() {
  if (!root_.defined()) throw ContractError("backward on an undefined tensor");
  if (root_.numel() != 1)
    throw ContractError("backward requires a scalar loss, got " + shape_str(root_.shape()));
  if (!root_.requires_grad()) return;  // nothing reachable requires gradients

  // Interior grads are per-call scratch; leaves accumulate across calls.
  for (auto& t : order_) {
    if (!t.is_leaf()) {
      t.grad_buffer();
      t.zero_grad();
    }
  }
  root_.grad_buffer()[0] += 1.0;
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    TensorData* td = it->get();
    if (td->backprop) td->backprop(*td);
  }
}

void backward(const Tensor& loss) { Graph::trace(loss).backward(); }

}  // namespace membot
