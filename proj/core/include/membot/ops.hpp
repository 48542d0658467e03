#pragma once

#include <vector>

#include "membot/tensor.hpp"

namespace membot {

// Elementwise binary ops. Broadcasting covers exactly three cases: identical
// shapes, a rank-1 vector expanded across the rows of a matrix, and a scalar
// against anything.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);

// Elementwise unary.
Tensor neg(const Tensor& x);
Tensor tanh(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor relu(const Tensor& x);
Tensor softplus(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor log(const Tensor& x);
Tensor square(const Tensor& x);
Tensor scale(const Tensor& x, double c);
Tensor add_scalar(const Tensor& x, double c);
// Subgradient: passthrough strictly inside (lo, hi), zero outside.
Tensor clamp(const Tensor& x, double lo, double hi);

// matmul: [m×k]·[k×n] → [m×n]; [k]·[k×n] → [n]; [m×k]·[k] → [m].
// Gradients: da = g·bᵀ, db = aᵀ·g.
Tensor matmul(const Tensor& a, const Tensor& b);

// Shape ops (gradient passthrough / scatter).
Tensor reshape(const Tensor& x, Shape shape);
Tensor concat_cols(const Tensor& a, const Tensor& b);
Tensor slice_cols(const Tensor& x, int start, int len);
Tensor stack_rows(const std::vector<Tensor>& rows);  // B × [d] → [B×d]
Tensor gather_rows(const Tensor& x, std::vector<int> rows);
Tensor take_row(const Tensor& x, int row);  // [B×d] → [d]

// Reductions.
Tensor sum(const Tensor& x);       // → scalar
Tensor mean(const Tensor& x);      // → scalar
Tensor sum_rows(const Tensor& x);  // [B×d] → [B]

// Per-row zero-mean/unit-variance normalization (biased variance, eps inside
// the square root) followed by an affine gain/bias.
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias,
                  double eps = 1e-5);

// Diagonal-Gaussian log density summed over the feature dimension.
// Rank-1 inputs give a scalar; [B×d] inputs give one value per row.
Tensor gaussian_log_prob(const Tensor& x, const Tensor& mean, const Tensor& log_std);

// Log density of a = tanh(u) where u ~ N(mean, exp(log_std)²), including the
// change-of-variables correction; shapes as in gaussian_log_prob.
Tensor squashed_gaussian_log_prob(const Tensor& pre_tanh, const Tensor& mean,
                                  const Tensor& log_std);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator*(const Tensor& a, double c) { return scale(a, c); }
inline Tensor operator*(double c, const Tensor& a) { return scale(a, c); }
inline Tensor operator-(const Tensor& a) { return neg(a); }

inline constexpr double kLn2Pi = 1.8378770664093454836;
inline constexpr double kTanhLogProbEps = 1e-6;

}  // namespace membot
