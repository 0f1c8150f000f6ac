#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "fvfpe/tridiagonal.hpp"

using namespace fvfpe;

namespace {
TridiagonalMatrix<double> random_m_matrix(std::mt19937& rng, Index n) {
  std::uniform_real_distribution<double> off(0.0, 4.0);
  std::uniform_real_distribution<double> slack(0.05, 2.0);
  auto m = TridiagonalMatrix<double>::zero(n);
  for (Index i = 0; i + 1 < n; ++i) {
    m.lower[i] = -off(rng);
    m.upper[i] = -off(rng);
  }
  for (Index j = 0; j < n; ++j) {
    double colsum = 0.0;
    if (j > 0) colsum += -m.upper[j - 1];
    if (j + 1 < n) colsum += -m.lower[j];
    m.diag[j] = colsum + slack(rng);
  }
  return m;
}
}  // namespace

TEST_CASE("thomas solve on the identity") {
  const auto m = TridiagonalMatrix<double>::identity(6);
  Vector<double> rhs(6);
  rhs << 3, -1, 4, -1, 5, -9;
  CHECK((solve_tridiagonal(m, rhs) - rhs).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("thomas solve on a hand-checked two by two system") {
  auto m = TridiagonalMatrix<double>::zero(2);
  m.diag << 2, 2;
  m.lower << -1;
  m.upper << -1;
  Vector<double> rhs(2);
  rhs << 1, 1;
  const auto x = solve_tridiagonal(m, rhs);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("thomas solve matches dense elimination on random m-matrices") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> v(-10.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + Index(rng() % 50);
    const auto m = random_m_matrix(rng, n);
    REQUIRE(verify_m_matrix(m).is_m_matrix);
    Vector<double> rhs(n);
    for (Index i = 0; i < n; ++i) rhs[i] = v(rng);
    const auto x = solve_tridiagonal(m, rhs);
    const Vector<double> ref = Eigen::PartialPivLU<DenseMatrix<double>>(to_dense(m)).solve(rhs);
    const double scale = std::max(1.0, ref.lpNorm<Eigen::Infinity>());
    CHECK((x - ref).lpNorm<Eigen::Infinity>() <= 1e-12 * scale);
    // residual stays at rounding level
    const Vector<double> r = apply(m, x) - rhs;
    const double bound = 1e-12 * (to_dense(m).cwiseAbs().rowwise().sum().maxCoeff() *
                                      x.lpNorm<Eigen::Infinity>() +
                                  rhs.lpNorm<Eigen::Infinity>());
    CHECK(r.lpNorm<Eigen::Infinity>() <= bound);
  }
}

TEST_CASE("pivoted solve handles non-dominant systems") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> v(-10.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + Index(rng() % 40);
    auto m = TridiagonalMatrix<double>::zero(n);
    for (Index i = 0; i < n; ++i) m.diag[i] = v(rng);
    for (Index i = 0; i + 1 < n; ++i) {
      m.lower[i] = v(rng);
      m.upper[i] = v(rng);
    }
    Vector<double> rhs(n);
    for (Index i = 0; i < n; ++i) rhs[i] = v(rng);
    Eigen::PartialPivLU<DenseMatrix<double>> lu(to_dense(m));
    if (std::abs(lu.determinant()) < 1e-8) continue;  // skip near-singular draws
    const Vector<double> ref = lu.solve(rhs);
    const auto x = solve_tridiagonal_pivoted(m, rhs);
    const double scale = std::max(1.0, ref.lpNorm<Eigen::Infinity>());
    CHECK((x - ref).lpNorm<Eigen::Infinity>() <= 1e-9 * scale);
  }
}

TEST_CASE("pivoted solve reports singular matrices") {
  auto m = TridiagonalMatrix<double>::zero(3);
  m.diag << 1, 0, 0;  // rows 2 and 3 are linearly dependent (both zero after elimination)
  const Vector<double> ones3 = Vector<double>::Ones(3);
  CHECK_THROWS_AS(solve_tridiagonal_pivoted(m, ones3), solver_error);
}

TEST_CASE("solvers reject size mismatches") {
  const auto m = TridiagonalMatrix<double>::identity(3);
  const Vector<double> v4 = Vector<double>::Ones(4);
  const Vector<double> v2 = Vector<double>::Ones(2);
  CHECK_THROWS_AS(solve_tridiagonal(m, v4), std::invalid_argument);
  CHECK_THROWS_AS(solve_tridiagonal_pivoted(m, v2), std::invalid_argument);
  CHECK_THROWS_AS(apply(m, v2), std::invalid_argument);
}

TEST_CASE("matvec agrees with the dense product") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> v(-5.0, 5.0);
  const Index n = 7;
  auto m = TridiagonalMatrix<double>::zero(n);
  for (Index i = 0; i < n; ++i) m.diag[i] = v(rng);
  for (Index i = 0; i + 1 < n; ++i) {
    m.lower[i] = v(rng);
    m.upper[i] = v(rng);
  }
  Vector<double> x(n);
  for (Index i = 0; i < n; ++i) x[i] = v(rng);
  CHECK((apply(m, x) - to_dense(m) * x).lpNorm<Eigen::Infinity>() < 1e-13);
}
