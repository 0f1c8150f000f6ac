#pragma once

#include "fvfpe/assembly.hpp"
#include "fvfpe/caputo_l1.hpp"
#include "fvfpe/drift_split.hpp"
#include "fvfpe/problem.hpp"
#include "fvfpe/tridiagonal.hpp"
#include "fvfpe/types.hpp"

namespace fvfpe {

/// Full discrete history {W^n}, (L+1) x (N+2) with boundary columns. Row n is
/// the profile at t_n; the L1 convolution needs every prior row, so all are kept.
template <typename Scalar = double>
struct SolutionField {
  RowMatrix<Scalar> values;
  Grid<Scalar> grid;

  auto interior(Index n) const { return values.row(n).segment(1, grid.n_interior); }
  auto profile(Index n) const { return values.row(n); }
};

/// One implicit step: solves
///   sys W^n = sigma (sum_{k<n} c_k W^k) + d^n + h g(., t_n)
/// given rows 0..n-1 of `values` (interior columns 1..N are read).
/// `source_term` is the already-scaled vector h g(x_i, t_n); pass size 0 for none.
template <typename Scalar>
Vector<Scalar> step(const RowMatrix<Scalar>& values, Index n, const TridiagonalMatrix<Scalar>& sys,
                    const L1Weights<Scalar>& weights, Scalar sigma, const Vector<Scalar>& load,
                    const Vector<Scalar>& source_term) {
  const Index n_interior = sys.order();
  Vector<Scalar> rhs =
      sigma * history_combination(values.topRows(n).middleCols(1, n_interior), weights, n);
  rhs += load;
  if (source_term.size() > 0) rhs += source_term;
  return solve_tridiagonal(sys, rhs);
}

namespace detail {

template <typename Scalar>
void check_consistent(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  spec.validate();
  if (grid.a != spec.a || grid.b != spec.b || grid.T != spec.T)
    throw std::invalid_argument("run: grid was built for a different domain");
}

template <typename Scalar>
SolutionField<Scalar> make_field(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  SolutionField<Scalar> field;
  field.grid = grid;
  field.values.resize(grid.n_steps + 1, grid.n_interior + 2);
  for (Index i = 0; i < grid.n_interior + 2; ++i)
    field.values(0, i) = spec.initial(grid.nodes[i]);
  return field;
}

}  // namespace detail

/// Runs the monotone finite volume scheme over the whole time grid.
/// Deterministic: fixed summation order, no cross-step parallelism.
template <typename Scalar>
SolutionField<Scalar> run(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  detail::check_consistent(spec, grid);
  const Index n_interior = grid.n_interior;

  L1Weights<Scalar> weights = l1_weights(spec.alpha, grid.n_steps);
  weights.scale = caputo_scale(grid.h, grid.dt, spec.alpha);
  const SplitDrift<Scalar> split = split_drift(spec.drift, spec.k_alpha, grid);
  const TridiagonalMatrix<Scalar> sys =
      system_matrix(weights.scale, assemble_diffusion(spec.k_alpha, grid.h, n_interior),
                    assemble_drift(split, n_interior));

  SolutionField<Scalar> field = detail::make_field(spec, grid);
  Vector<Scalar> source_term;
  if (spec.has_source()) source_term.resize(n_interior);
  for (Index n = 1; n <= grid.n_steps; ++n) {
    const Scalar tn = grid.times[n];
    const Scalar g1 = spec.boundary_left(tn);
    const Scalar g2 = spec.boundary_right(tn);
    const Vector<Scalar> load = boundary_load(split, spec.k_alpha, grid.h, g1, g2);
    if (spec.has_source())
      for (Index i = 0; i < n_interior; ++i)
        source_term[i] = grid.h * spec.source(grid.nodes[i + 1], tn);
    const Vector<Scalar> wn = step(field.values, n, sys, weights, weights.scale, load, source_term);
    field.values(n, 0) = g1;
    field.values.row(n).segment(1, n_interior) = wn.transpose();
    field.values(n, n_interior + 1) = g2;
  }
  return field;
}

}  // namespace fvfpe
