#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fvfpe/caputo_l1.hpp"
#include "fvfpe/drift_split.hpp"
#include "fvfpe/stepper.hpp"
#include "fvfpe/types.hpp"

namespace fvfpe {

/// Discrete L1 norm: sum_i h |v_i|.
template <typename Derived, typename Scalar = typename Derived::Scalar>
Scalar discrete_l1_norm(const Eigen::MatrixBase<Derived>& v, Scalar h) {
  if (!(h > Scalar(0))) throw std::invalid_argument("discrete_l1_norm: h must be positive");
  return h * v.cwiseAbs().sum();
}

template <typename Scalar = double>
struct ErrorSummary {
  Scalar max_l1{};   // max over n of sum_i h |e_i^n|
  Scalar max_inf{};  // max over n of max_i |e_i^n|
  std::vector<Scalar> per_step_l1, per_step_inf;  // indexed by n-1, n = 1..L
};

/// Errors e_i^n = w(x_i, t_n) - W_i^n over interior nodes, n = 1..L.
template <typename Scalar>
ErrorSummary<Scalar> error_summary(const SolutionField<Scalar>& field,
                                   const std::function<Scalar(Scalar, Scalar)>& exact) {
  const Grid<Scalar>& grid = field.grid;
  ErrorSummary<Scalar> summary;
  summary.per_step_l1.reserve(grid.n_steps);
  summary.per_step_inf.reserve(grid.n_steps);
  Vector<Scalar> e(grid.n_interior);
  for (Index n = 1; n <= grid.n_steps; ++n) {
    for (Index i = 0; i < grid.n_interior; ++i)
      e[i] = exact(grid.nodes[i + 1], grid.times[n]) - field.values(n, i + 1);
    const Scalar l1 = discrete_l1_norm(e, grid.h);
    const Scalar li = e.template lpNorm<Eigen::Infinity>();
    summary.per_step_l1.push_back(l1);
    summary.per_step_inf.push_back(li);
    if (l1 > summary.max_l1) summary.max_l1 = l1;
    if (li > summary.max_inf) summary.max_inf = li;
  }
  return summary;
}

/// |ln(err_fine/err_coarse) / ln(size_fine/size_coarse)|.
template <typename Scalar>
Scalar convergence_rate(Scalar err_coarse, Scalar err_fine, Scalar size_coarse, Scalar size_fine) {
  if (!(err_coarse > Scalar(0)) || !(err_fine > Scalar(0)))
    throw std::invalid_argument("convergence_rate: errors must be positive");
  if (!(size_coarse > Scalar(0)) || !(size_fine > Scalar(0)) || size_coarse == size_fine)
    throw std::invalid_argument("convergence_rate: sizes must be positive and distinct");
  return std::abs(std::log(err_fine / err_coarse) / std::log(size_fine / size_coarse));
}

template <typename Scalar = double>
struct ResidualReport {
  Scalar max_abs{};     // max over i,n of the absolute row residual
  Scalar max_scaled{};  // max over i,n of |residual| / (largest term magnitude in the row)
};

/// Plugs a computed field back into the discrete scheme (with the source term)
/// and reports the worst row residual. A correct direct solve leaves
/// max_scaled at the rounding level.
template <typename Scalar>
ResidualReport<Scalar> residual_check(const SolutionField<Scalar>& field,
                                      const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  const Index n_interior = grid.n_interior;
  const Scalar k = spec.k_alpha;
  const Scalar h = grid.h;
  const L1Weights<Scalar> weights = l1_weights(spec.alpha, grid.n_steps);
  const Scalar sigma = caputo_scale(h, grid.dt, spec.alpha);
  const SplitDrift<Scalar> split = split_drift(spec.drift, k, grid);
  const auto& w = field.values;

  auto flux = [&](Index half, Scalar wl, Scalar wr) {
    return split.fm[half] * (wl + wr) / 2 + split.fu[half] * wl + split.fl[half] * wr;
  };

  ResidualReport<Scalar> report;
  for (Index n = 1; n <= grid.n_steps; ++n) {
    for (Index i = 1; i <= n_interior; ++i) {
      Scalar hist = weights.a[n - 1] * w(0, i);
      for (Index kk = 1; kk < n; ++kk)
        hist += (weights.a[n - kk - 1] - weights.a[n - kk]) * w(kk, i);
      const Scalar lhs = sigma * (w(n, i) - hist);
      const Scalar diff_term =
          k * ((w(n, i + 1) - w(n, i)) / h - (w(n, i) - w(n, i - 1)) / h);
      const Scalar flux_hi = flux(i, w(n, i), w(n, i + 1));
      const Scalar flux_lo = flux(i - 1, w(n, i - 1), w(n, i));
      const Scalar src = spec.has_source() ? h * spec.source(grid.nodes[i], grid.times[n]) : Scalar(0);
      const Scalar residual = lhs - (diff_term - (flux_hi - flux_lo) + src);
      const Scalar scale =
          std::max({std::abs(sigma * w(n, i)), std::abs(sigma * hist), std::abs(diff_term),
                    std::abs(flux_hi), std::abs(flux_lo), std::abs(src), Scalar(1e-300)});
      report.max_abs = std::max(report.max_abs, std::abs(residual));
      report.max_scaled = std::max(report.max_scaled, std::abs(residual) / scale);
    }
  }
  return report;
}

/// Number of sign changes between successive nonzero differences of a profile.
template <typename Derived>
int oscillation_count(const Eigen::MatrixBase<Derived>& profile) {
  using Scalar = typename Derived::Scalar;
  int count = 0;
  Scalar prev = Scalar(0);
  for (Index i = 0; i + 1 < profile.size(); ++i) {
    const Scalar d = profile[i + 1] - profile[i];
    if (d == Scalar(0)) continue;
    if (prev != Scalar(0) && ((d > Scalar(0)) != (prev > Scalar(0)))) ++count;
    prev = d;
  }
  return count;
}

}  // namespace fvfpe
