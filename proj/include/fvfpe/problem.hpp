#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "fvfpe/types.hpp"

namespace fvfpe {

/// Continuous problem data for the fractional advection-diffusion equation
///   d^alpha w / dt^alpha = k_alpha w_xx - (f(x) w)_x + g(x,t)
/// on [a,b] x (0,T] with Dirichlet data g1, g2 and initial profile phi.
template <typename Scalar = double>
struct ProblemSpec {
  Scalar alpha{};    // fractional order, in (0,1)
  Scalar k_alpha{};  // diffusion coefficient, > 0
  std::function<Scalar(Scalar)> drift;           // f(x)
  std::function<Scalar(Scalar)> initial;         // phi(x)
  std::function<Scalar(Scalar)> boundary_left;   // g1(t)
  std::function<Scalar(Scalar)> boundary_right;  // g2(t)
  std::function<Scalar(Scalar, Scalar)> source;  // g(x,t); empty means no source
  Scalar a{0};
  Scalar b{1};
  Scalar T{1};

  bool has_source() const { return static_cast<bool>(source); }

  void validate() const {
    if (!(alpha > Scalar(0) && alpha < Scalar(1)))
      throw std::invalid_argument("ProblemSpec: alpha must lie in (0,1)");
    if (!(k_alpha > Scalar(0)))
      throw std::invalid_argument("ProblemSpec: k_alpha must be positive");
    if (!(a < b)) throw std::invalid_argument("ProblemSpec: requires a < b");
    if (!(T > Scalar(0))) throw std::invalid_argument("ProblemSpec: requires T > 0");
    if (!drift || !initial || !boundary_left || !boundary_right)
      throw std::invalid_argument("ProblemSpec: drift/initial/boundary maps are required");
  }
};

/// Uniform space-time mesh: N interior nodes, N+1 half points, L time steps.
/// Control volumes are [x_{i-1/2}, x_{i+1/2}] for i = 1..N.
template <typename Scalar = double>
struct Grid {
  Index n_interior{};  // N
  Index n_steps{};     // L
  Scalar a{}, b{}, T{};
  Scalar h{};   // (b-a)/(N+1)
  Scalar dt{};  // T/L
  Vector<Scalar> nodes;        // x_i = a + i h, i = 0..N+1
  Vector<Scalar> half_points;  // x_{i+1/2},    i = 0..N
  Vector<Scalar> times;        // t_k = k dt,   k = 0..L

  Scalar node(Index i) const { return nodes[i]; }
  Scalar half_point(Index i) const { return half_points[i]; }
  Scalar time(Index k) const { return times[k]; }
};

template <typename Scalar>
Grid<Scalar> build_grid(Scalar a, Scalar b, Scalar T, Index n_interior, Index n_steps) {
  if (!(a < b)) throw std::invalid_argument("build_grid: requires a < b");
  if (!(T > Scalar(0))) throw std::invalid_argument("build_grid: requires T > 0");
  if (n_interior < 1) throw std::invalid_argument("build_grid: requires N >= 1");
  if (n_steps < 1) throw std::invalid_argument("build_grid: requires L >= 1");

  Grid<Scalar> grid;
  grid.n_interior = n_interior;
  grid.n_steps = n_steps;
  grid.a = a;
  grid.b = b;
  grid.T = T;
  grid.h = (b - a) / Scalar(n_interior + 1);
  grid.dt = T / Scalar(n_steps);

  grid.nodes.resize(n_interior + 2);
  for (Index i = 0; i <= n_interior + 1; ++i) grid.nodes[i] = a + Scalar(i) * grid.h;
  grid.nodes[0] = a;
  grid.nodes[n_interior + 1] = b;

  grid.half_points.resize(n_interior + 1);
  for (Index i = 0; i <= n_interior; ++i)
    grid.half_points[i] = a + (Scalar(i) + Scalar(0.5)) * grid.h;

  grid.times.resize(n_steps + 1);
  for (Index k = 0; k <= n_steps; ++k) grid.times[k] = Scalar(k) * grid.dt;
  grid.times[n_steps] = T;
  return grid;
}

template <typename Scalar>
Grid<Scalar> build_grid(const ProblemSpec<Scalar>& spec, Index n_interior, Index n_steps) {
  return build_grid(spec.a, spec.b, spec.T, n_interior, n_steps);
}

/// Exact nodal initial values (phi(x_1), ..., phi(x_N)).
template <typename Scalar>
Vector<Scalar> sample_initial(const ProblemSpec<Scalar>& spec, const Grid<Scalar>& grid) {
  Vector<Scalar> w0(grid.n_interior);
  for (Index i = 0; i < grid.n_interior; ++i) w0[i] = spec.initial(grid.nodes[i + 1]);
  return w0;
}

}  // namespace fvfpe
