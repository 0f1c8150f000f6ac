#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "fvfpe/stepper.hpp"
#include "fvfpe/types.hpp"

namespace fvfpe {

/// Independent cross-check implementation of the same scheme, kept at desk
/// scale (N <= 64, L <= 256). Everything is recomputed from scratch on a
/// deliberately different path: the interior equation is accumulated row by
/// row directly from the blended flux definitions (rather than from the band
/// entry formulas), the matrix is dense, and each step is solved with dense
/// partial-pivoting LU. Agreement with `run` guards against transcription
/// mistakes in the band assembly.
template <typename Scalar>
SolutionField<Scalar> dense_oracle_run(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  detail::check_consistent(spec, grid);
  if (grid.n_interior > 64 || grid.n_steps > 256)
    throw std::invalid_argument("dense_oracle_run: oracle scale is N <= 64, L <= 256");

  const Index N = grid.n_interior;
  const Index L = grid.n_steps;
  const Scalar k = spec.k_alpha;
  const Scalar h = grid.h;
  const Scalar sigma = h * std::pow(grid.dt, -spec.alpha) / std::tgamma(Scalar(2) - spec.alpha);

  // split drift at half points, straight from the definitions
  Vector<Scalar> fm(N + 1), fu(N + 1), fl(N + 1);
  for (Index i = 0; i <= N; ++i) {
    const Scalar fv = spec.drift(grid.half_points[i]);
    fu[i] = std::max(fv - 2 * k / h, Scalar(0));
    fl[i] = std::min(fv + 2 * k / h, Scalar(0));
    fm[i] = fv - fu[i] - fl[i];
  }

  SolutionField<Scalar> field = detail::make_field(spec, grid);
  auto& w = field.values;

  // columns -1 and N of the extended unknown row map to the boundary values
  for (Index n = 1; n <= L; ++n) {
    const Scalar tn = grid.times[n];
    const Scalar g1 = spec.boundary_left(tn);
    const Scalar g2 = spec.boundary_right(tn);

    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(N, N);
    Vector<Scalar> rhs = Vector<Scalar>::Zero(N);
    auto add = [&](Index row, Index col, Scalar coef) {
      if (col < 0)
        rhs[row] -= coef * g1;
      else if (col >= N)
        rhs[row] -= coef * g2;
      else
        m(row, col) += coef;
    };

    for (Index i = 1; i <= N; ++i) {
      const Index row = i - 1;
      add(row, i - 1, sigma);  // sigma W_i^n
      // -k ((W_{i+1}-W_i)/h - (W_i-W_{i-1})/h)
      add(row, i, -k / h);
      add(row, i - 1, 2 * k / h);
      add(row, i - 2, -k / h);
      // + F_{i+1/2} with F = fm (W_i+W_{i+1})/2 + fu W_i + fl W_{i+1}
      add(row, i - 1, fm[i] / 2 + fu[i]);
      add(row, i, fm[i] / 2 + fl[i]);
      // - F_{i-1/2}
      add(row, i - 2, -(fm[i - 1] / 2 + fu[i - 1]));
      add(row, i - 1, -(fm[i - 1] / 2 + fl[i - 1]));
      // sigma (sum_{kk=1}^{n-1} (a_{n-kk-1} - a_{n-kk}) W_i^kk + a_{n-1} W_i^0)
      const Scalar p = Scalar(1) - spec.alpha;
      auto a_of = [&](Index j) { return std::pow(Scalar(j + 1), p) - std::pow(Scalar(j), p); };
      Scalar hist = a_of(n - 1) * w(0, i);
      for (Index kk = 1; kk < n; ++kk) hist += (a_of(n - kk - 1) - a_of(n - kk)) * w(kk, i);
      rhs[row] += sigma * hist;
      if (spec.has_source()) rhs[row] += h * spec.source(grid.nodes[i], tn);
    }

    const Vector<Scalar> wn = Eigen::PartialPivLU<DenseMatrix<Scalar>>(m).solve(rhs);
    w(n, 0) = g1;
    w.row(n).segment(1, N) = wn.transpose();
    w(n, N + 1) = g2;
  }
  return field;
}

}  // namespace fvfpe
