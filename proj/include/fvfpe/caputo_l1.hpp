#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fvfpe/types.hpp"

namespace fvfpe {

/// L1 discretization weights for the Caputo derivative of order alpha:
/// a_k = (k+1)^{1-alpha} - k^{1-alpha}. Strictly decreasing positives with a_0 = 1.
template <typename Scalar = double>
struct L1Weights {
  Scalar alpha{};
  Vector<Scalar> a;
  Scalar scale{0};  // sigma = h dt^{-alpha} / Gamma(2-alpha); set by the caller via caputo_scale
};

template <typename Scalar>
L1Weights<Scalar> l1_weights(Scalar alpha, Index count) {
  if (!(alpha > Scalar(0) && alpha < Scalar(1)))
    throw std::invalid_argument("l1_weights: alpha must lie in (0,1)");
  if (count < 1) throw std::invalid_argument("l1_weights: count must be >= 1");
  L1Weights<Scalar> w;
  w.alpha = alpha;
  w.a.resize(count);
  const Scalar p = Scalar(1) - alpha;
  for (Index k = 0; k < count; ++k)
    w.a[k] = std::pow(Scalar(k + 1), p) - std::pow(Scalar(k), p);
  return w;
}

/// sigma = h dt^{-alpha} / Gamma(2-alpha), the prefactor of the discrete Caputo operator.
template <typename Scalar>
Scalar caputo_scale(Scalar h, Scalar dt, Scalar alpha) {
  return h * std::pow(dt, -alpha) / std::tgamma(Scalar(2) - alpha);
}

/// Coefficient of W^k in the history sum at step n: a_{n-1} for k = 0,
/// a_{n-k-1} - a_{n-k} for 1 <= k <= n-1. All positive.
template <typename Scalar>
Scalar history_coefficient(const L1Weights<Scalar>& weights, Index n, Index k) {
  return k == 0 ? weights.a[n - 1] : weights.a[n - k - 1] - weights.a[n - k];
}

/// Unscaled L1 history combination
///   sum_{k=1}^{n-1} (a_{n-k-1} - a_{n-k}) W^k + a_{n-1} W^0,
/// where row k of `history` holds W^k. The caller multiplies by sigma.
template <typename Derived, typename Scalar = typename Derived::Scalar>
Vector<Scalar> history_combination(const Eigen::MatrixBase<Derived>& history,
                                   const L1Weights<Scalar>& weights, Index n) {
  if (n < 1 || history.rows() < n)
    throw std::invalid_argument("history_combination: need rows W^0..W^{n-1}");
  if (weights.a.size() < n)
    throw std::invalid_argument("history_combination: weights shorter than n");
  Vector<Scalar> out = weights.a[n - 1] * history.row(0).transpose();
  for (Index k = 1; k < n; ++k)
    out.noalias() += (weights.a[n - k - 1] - weights.a[n - k]) * history.row(k).transpose();
  return out;
}

template <typename Scalar>
Vector<Scalar> history_combination(const std::vector<Vector<Scalar>>& history,
                                   const L1Weights<Scalar>& weights, Index n) {
  if (n < 1 || static_cast<Index>(history.size()) < n)
    throw std::invalid_argument("history_combination: need vectors W^0..W^{n-1}");
  if (weights.a.size() < n)
    throw std::invalid_argument("history_combination: weights shorter than n");
  const Index len = history[0].size();
  for (Index k = 1; k < n; ++k)
    if (history[k].size() != len)
      throw std::invalid_argument("history_combination: mismatched vector lengths");
  Vector<Scalar> out = weights.a[n - 1] * history[0];
  for (Index k = 1; k < n; ++k)
    out.noalias() += (weights.a[n - k - 1] - weights.a[n - k]) * history[k];
  return out;
}

}  // namespace fvfpe
