#pragma once

#include "fvfpe/caputo_l1.hpp"
#include "fvfpe/stepper.hpp"
#include "fvfpe/tridiagonal.hpp"

namespace fvfpe {

/// Reference finite difference scheme: identical L1 time discretization, but
/// center differences in space with the drift evaluated at nodes,
///   w_xx ~ (w_{i+1} - 2w_i + w_{i-1})/h^2,
///   (f w)_x ~ (f(x_{i+1}) w_{i+1} - f(x_{i-1}) w_{i-1})/(2h).
/// Rows are scaled by h so sigma and the load conventions match the FV scheme.
/// The matrix is not an M-matrix on coarse grids with large drift (the point of
/// the comparison), so a pivoted solve is used; singularity is reported, not masked.
template <typename Scalar>
SolutionField<Scalar> run_fd(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  detail::check_consistent(spec, grid);
  const Index n_interior = grid.n_interior;
  const Scalar k = spec.k_alpha;
  const Scalar h = grid.h;

  L1Weights<Scalar> weights = l1_weights(spec.alpha, grid.n_steps);
  weights.scale = caputo_scale(h, grid.dt, spec.alpha);

  Vector<Scalar> f_nodes(n_interior + 2);
  for (Index i = 0; i < n_interior + 2; ++i) f_nodes[i] = spec.drift(grid.nodes[i]);

  TridiagonalMatrix<Scalar> sys = TridiagonalMatrix<Scalar>::zero(n_interior);
  sys.diag.setConstant(weights.scale + Scalar(2) * k / h);
  for (Index c = 0; c + 1 < n_interior; ++c) {
    sys.lower[c] = -k / h - f_nodes[c + 1] / 2;  // row c+1, coefficient of W_c
    sys.upper[c] = -k / h + f_nodes[c + 2] / 2;  // row c,   coefficient of W_{c+1}
  }

  SolutionField<Scalar> field = detail::make_field(spec, grid);
  Vector<Scalar> rhs(n_interior);
  for (Index n = 1; n <= grid.n_steps; ++n) {
    const Scalar tn = grid.times[n];
    const Scalar g1 = spec.boundary_left(tn);
    const Scalar g2 = spec.boundary_right(tn);
    rhs = weights.scale *
          history_combination(field.values.topRows(n).middleCols(1, n_interior), weights, n);
    rhs[0] += (k / h + f_nodes[0] / 2) * g1;
    rhs[n_interior - 1] += (k / h - f_nodes[n_interior + 1] / 2) * g2;
    if (spec.has_source())
      for (Index i = 0; i < n_interior; ++i) rhs[i] += h * spec.source(grid.nodes[i + 1], tn);
    const Vector<Scalar> wn = solve_tridiagonal_pivoted(sys, rhs);
    field.values(n, 0) = g1;
    field.values.row(n).segment(1, n_interior) = wn.transpose();
    field.values(n, n_interior + 1) = g2;
  }
  return field;
}

}  // namespace fvfpe
