#pragma once

#include <stdexcept>

#include "fvfpe/drift_split.hpp"
#include "fvfpe/tridiagonal.hpp"
#include "fvfpe/types.hpp"

namespace fvfpe {

/// Diffusion stiffness: diag 2k/h, off-diagonals -k/h (per-row equations are
/// scaled by h, i.e. flux differences, not second differences).
template <typename Scalar>
TridiagonalMatrix<Scalar> assemble_diffusion(Scalar k_alpha, Scalar h, Index n) {
  if (!(k_alpha > Scalar(0)) || !(h > Scalar(0)) || n < 1)
    throw std::invalid_argument("assemble_diffusion: requires k_alpha > 0, h > 0, N >= 1");
  TridiagonalMatrix<Scalar> m;
  m.diag = Vector<Scalar>::Constant(n, Scalar(2) * k_alpha / h);
  m.lower = Vector<Scalar>::Constant(n > 1 ? n - 1 : 0, -k_alpha / h);
  m.upper = m.lower;
  return m;
}

/// Flux matrix of the split drift. Row i of the interior system carries the
/// difference of the blended fluxes
///   F_{i+1/2} = f^m_{i+1/2} (W_i + W_{i+1})/2 + f^u_{i+1/2} W_i + f^l_{i+1/2} W_{i+1},
/// which in band storage (0-based column c, half-point index c <-> x_{c+1/2}) gives
///   diag[c]  = -fm[c]/2 + fm[c+1]/2 - fl[c] + fu[c+1]
///   lower[c] = -fm[c+1]/2 - fu[c+1]     (entry (c+1, c))
///   upper[c] =  fm[c+1]/2 + fl[c+1]     (entry (c, c+1))
template <typename Scalar>
TridiagonalMatrix<Scalar> assemble_drift(const SplitDrift<Scalar>& split, Index n) {
  if (split.fm.size() != n + 1)
    throw std::invalid_argument("assemble_drift: split sampled on a different grid");
  TridiagonalMatrix<Scalar> m = TridiagonalMatrix<Scalar>::zero(n);
  const auto& fm = split.fm;
  const auto& fu = split.fu;
  const auto& fl = split.fl;
  for (Index c = 0; c < n; ++c)
    m.diag[c] = -fm[c] / 2 + fm[c + 1] / 2 - fl[c] + fu[c + 1];
  for (Index c = 0; c + 1 < n; ++c) {
    m.lower[c] = -fm[c + 1] / 2 - fu[c + 1];
    m.upper[c] = fm[c + 1] / 2 + fl[c + 1];
  }
  return m;
}

/// Boundary contribution to the right-hand side:
///   d_1 = (f^m_{1/2}/2   + f^u_{1/2}   + k/h) g1(t_n)
///   d_N = (-f^m_{N+1/2}/2 - f^l_{N+1/2} + k/h) g2(t_n)
/// (both coefficients are nonnegative; for N = 1 the two add into one entry).
template <typename Scalar>
Vector<Scalar> boundary_load(const SplitDrift<Scalar>& split, Scalar k_alpha, Scalar h,
                             Scalar g1_val, Scalar g2_val) {
  const Index n = split.fm.size() - 1;
  Vector<Scalar> d = Vector<Scalar>::Zero(n);
  d[0] += (split.fm[0] / 2 + split.fu[0] + k_alpha / h) * g1_val;
  d[n - 1] += (-split.fm[n] / 2 - split.fl[n] + k_alpha / h) * g2_val;
  return d;
}

}  // namespace fvfpe
