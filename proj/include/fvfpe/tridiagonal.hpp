#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fvfpe/types.hpp"

namespace fvfpe {

struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tridiagonal matrix in row-wise band storage:
/// lower[i] = M(i+1, i), diag[i] = M(i, i), upper[i] = M(i, i+1).
template <typename Scalar = double>
struct TridiagonalMatrix {
  Vector<Scalar> lower;  // length N-1
  Vector<Scalar> diag;   // length N
  Vector<Scalar> upper;  // length N-1

  Index order() const { return diag.size(); }

  static TridiagonalMatrix zero(Index n) {
    TridiagonalMatrix m;
    m.lower = Vector<Scalar>::Zero(n > 0 ? n - 1 : 0);
    m.diag = Vector<Scalar>::Zero(n);
    m.upper = Vector<Scalar>::Zero(n > 0 ? n - 1 : 0);
    return m;
  }

  static TridiagonalMatrix identity(Index n) {
    TridiagonalMatrix m = zero(n);
    m.diag.setOnes();
    return m;
  }
};

template <typename Scalar>
DenseMatrix<Scalar> to_dense(const TridiagonalMatrix<Scalar>& m) {
  const Index n = m.order();
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    d(i, i) = m.diag[i];
    if (i + 1 < n) {
      d(i + 1, i) = m.lower[i];
      d(i, i + 1) = m.upper[i];
    }
  }
  return d;
}

template <typename Scalar>
Vector<Scalar> apply(const TridiagonalMatrix<Scalar>& m, const Vector<Scalar>& x) {
  const Index n = m.order();
  if (x.size() != n) throw std::invalid_argument("apply: size mismatch");
  Vector<Scalar> y(n);
  for (Index i = 0; i < n; ++i) {
    Scalar v = m.diag[i] * x[i];
    if (i > 0) v += m.lower[i - 1] * x[i - 1];
    if (i + 1 < n) v += m.upper[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

/// sigma I + A + B, entrywise.
template <typename Scalar>
TridiagonalMatrix<Scalar> system_matrix(Scalar sigma, const TridiagonalMatrix<Scalar>& A,
                                        const TridiagonalMatrix<Scalar>& B) {
  if (A.order() != B.order()) throw std::invalid_argument("system_matrix: order mismatch");
  TridiagonalMatrix<Scalar> m;
  m.lower = A.lower + B.lower;
  m.diag = (A.diag + B.diag).array() + sigma;
  m.upper = A.upper + B.upper;
  return m;
}

template <typename Scalar = double>
struct MMatrixReport {
  bool is_m_matrix{false};
  Scalar min_column_slack{};       // min over columns of diag - sum of |off-diagonals| in the column
  std::vector<Index> offending_indices;  // columns violating sign or strict dominance
};

/// Checks the sufficient M-matrix condition: positive diagonals, non-positive
/// off-diagonals, strict column diagonal dominance (slack > 0, no tolerance).
template <typename Scalar>
MMatrixReport<Scalar> verify_m_matrix(const TridiagonalMatrix<Scalar>& m) {
  const Index n = m.order();
  MMatrixReport<Scalar> report;
  report.is_m_matrix = true;
  for (Index j = 0; j < n; ++j) {
    bool bad = false;
    if (!(m.diag[j] > Scalar(0))) bad = true;
    Scalar off = Scalar(0);
    if (j > 0) {
      off += std::abs(m.upper[j - 1]);  // entry (j-1, j)
      if (m.upper[j - 1] > Scalar(0)) bad = true;
    }
    if (j + 1 < n) {
      off += std::abs(m.lower[j]);  // entry (j+1, j)
      if (m.lower[j] > Scalar(0)) bad = true;
    }
    const Scalar slack = m.diag[j] - off;
    if (j == 0 || slack < report.min_column_slack) report.min_column_slack = slack;
    if (!(slack > Scalar(0))) bad = true;
    if (bad) {
      report.is_m_matrix = false;
      report.offending_indices.push_back(j);
    }
  }
  return report;
}

/// Thomas elimination, valid without pivoting for the strictly column-dominant
/// M-matrix systems produced by the scheme.
template <typename Scalar>
Vector<Scalar> solve_tridiagonal(const TridiagonalMatrix<Scalar>& m, const Vector<Scalar>& rhs) {
  const Index n = m.order();
  if (rhs.size() != n) throw std::invalid_argument("solve_tridiagonal: size mismatch");
  assert(verify_m_matrix(m).is_m_matrix);
  Vector<Scalar> c(n), d(n);
  Scalar pivot = m.diag[0];
  if (std::abs(pivot) < Scalar(1e-300)) throw solver_error("solve_tridiagonal: zero pivot");
  c[0] = n > 1 ? m.upper[0] / pivot : Scalar(0);
  d[0] = rhs[0] / pivot;
  for (Index i = 1; i < n; ++i) {
    pivot = m.diag[i] - m.lower[i - 1] * c[i - 1];
    if (std::abs(pivot) < Scalar(1e-300)) throw solver_error("solve_tridiagonal: zero pivot");
    c[i] = i + 1 < n ? m.upper[i] / pivot : Scalar(0);
    d[i] = (rhs[i] - m.lower[i - 1] * d[i - 1]) / pivot;
  }
  Vector<Scalar> x(n);
  x[n - 1] = d[n - 1];
  for (Index i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

/// Tridiagonal LU with partial pivoting (one fill-in superdiagonal). Handles the
/// non-dominant systems of the finite difference reference on coarse grids.
template <typename Scalar>
Vector<Scalar> solve_tridiagonal_pivoted(const TridiagonalMatrix<Scalar>& m,
                                         const Vector<Scalar>& rhs) {
  const Index n = m.order();
  if (rhs.size() != n) throw std::invalid_argument("solve_tridiagonal_pivoted: size mismatch");
  Vector<Scalar> dl = m.lower, d = m.diag, du = m.upper;
  Vector<Scalar> du2 = Vector<Scalar>::Zero(n > 2 ? n - 2 : 0);
  Vector<Scalar> b = rhs;
  for (Index i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (std::abs(d[i]) < Scalar(1e-300))
        throw solver_error("solve_tridiagonal_pivoted: matrix is singular");
      const Scalar mult = dl[i] / d[i];
      d[i + 1] -= mult * du[i];
      b[i + 1] -= mult * b[i];
      if (i + 2 < n) du2[i] = Scalar(0);
    } else {
      // swap rows i and i+1
      const Scalar mult = d[i] / dl[i];
      d[i] = dl[i];
      const Scalar tmp = d[i + 1];
      d[i + 1] = du[i] - mult * tmp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -mult * du2[i];
      }
      du[i] = tmp;
      const Scalar br = b[i];
      b[i] = b[i + 1];
      b[i + 1] = br - mult * b[i];
    }
  }
  if (std::abs(d[n - 1]) < Scalar(1e-300))
    throw solver_error("solve_tridiagonal_pivoted: matrix is singular");
  Vector<Scalar> x(n);
  x[n - 1] = b[n - 1] / d[n - 1];
  if (n > 1) x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
  for (Index i = n - 3; i >= 0; --i)
    x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
  return x;
}

}  // namespace fvfpe
