#include <doctest.h>

#include <cmath>
#include <random>

#include "fvfpe/catalog.hpp"
#include "fvfpe/dense_oracle.hpp"
#include "fvfpe/fd_reference.hpp"
#include "fvfpe/stepper.hpp"
#include "fvfpe/verification.hpp"

using namespace fvfpe;

TEST_CASE("discrete l1 norm") {
  CHECK(discrete_l1_norm(Vector<double>::Zero(5), 0.3) == 0.0);
  Vector<double> v2(2);
  v2 << 1, 1;
  CHECK(discrete_l1_norm(v2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  Vector<double> v3(2);
  v3 << 3, -4;
  CHECK(discrete_l1_norm(v3, 0.1) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(discrete_l1_norm(v3, 0.0), std::invalid_argument);
}

TEST_CASE("error summary vanishes on the exact field and obeys the norm comparison") {
  const auto p = example41(0.5);
  const auto g = build_grid(p.spec, Index(7), Index(9));
  SolutionField<double> field;
  field.grid = g;
  field.values.resize(g.n_steps + 1, g.n_interior + 2);
  for (Index n = 0; n <= g.n_steps; ++n)
    for (Index i = 0; i < g.n_interior + 2; ++i)
      field.values(n, i) = p.exact(g.nodes[i], g.times[n]);
  const auto s = error_summary(field, p.exact);
  CHECK(s.max_l1 == 0.0);
  CHECK(s.max_inf == 0.0);
  // perturb and re-check the norm inequality max_l1 <= (b-a) max_inf
  field.values.array() += 0.01;
  const auto s2 = error_summary(field, p.exact);
  CHECK(s2.max_l1 > 0.0);
  CHECK(s2.max_l1 <= (p.spec.b - p.spec.a) * s2.max_inf * (1 + 1e-14));
  CHECK(s2.per_step_l1.size() == size_t(g.n_steps));
}

TEST_CASE("convergence rate estimator") {
  CHECK(convergence_rate(1.0, 0.5, 10.0, 20.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(convergence_rate(1.0, 0.25, 10.0, 20.0) == doctest::Approx(2.0).epsilon(1e-13));
  // printed-table spot value
  CHECK(convergence_rate(4.349e-2, 1.976e-2, 20.0, 40.0) ==
        doctest::Approx(1.1381007618793906).epsilon(1e-12));
  CHECK_THROWS_AS(convergence_rate(0.0, 1.0, 10.0, 20.0), std::invalid_argument);
  CHECK_THROWS_AS(convergence_rate(1.0, -1.0, 10.0, 20.0), std::invalid_argument);
  CHECK_THROWS_AS(convergence_rate(1.0, 1.0, 10.0, 10.0), std::invalid_argument);
  // scale invariance
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> dist(1e-8, 1e2);
  for (int j = 0; j < 20; ++j) {
    const double ec = dist(rng), ef = dist(rng), c = dist(rng);
    const double r1 = convergence_rate(ec, ef, 16.0, 64.0);
    const double r2 = convergence_rate(c * ec, c * ef, 16.0, 64.0);
    CHECK(std::abs(r1 - r2) <= 1e-12 * (1 + r1));
  }
}

TEST_CASE("error summary reproduces reference coarse-grid error levels") {
  // frozen reference values for the manufactured cosine problem
  {
    const auto p = example41(0.5);
    const auto g = build_grid(p.spec, Index(9), Index(10000));
    const auto s = error_summary(run(p.spec, g), p.exact);
    CHECK(s.max_l1 == doctest::Approx(8.779e-2).epsilon(0.01));
  }
  {
    const auto p = example41(0.2);
    const auto g = build_grid(p.spec, Index(39), Index(10000));
    const auto s = error_summary(run(p.spec, g), p.exact);
    CHECK(s.max_inf == doctest::Approx(3.119e-2).epsilon(0.01));
  }
}

TEST_CASE("residual of a computed field is at rounding level") {
  for (const char* name : {"example41", "example42_case1", "constant"}) {
    const auto p = make_problem<double>(name, 0.5);
    const auto g = build_grid(p.spec, Index(13), Index(21));
    const auto field = run(p.spec, g);
    const auto r = residual_check(field, p.spec, g);
    CHECK(r.max_scaled <= 1e-10);
  }
}

TEST_CASE("residual detects a corrupted field") {
  const auto p = zero_problem<double>();
  const auto g = build_grid(p.spec, Index(5), Index(6));
  auto field = run(p.spec, g);
  const auto clean = residual_check(field, p.spec, g);
  CHECK(clean.max_abs == 0.0);
  field.values(3, 2) += 1.0;
  const auto bad = residual_check(field, p.spec, g);
  const double sigma = caputo_scale(g.h, g.dt, p.spec.alpha);
  CHECK(bad.max_abs >= sigma);
}

TEST_CASE("oscillation count") {
  Vector<double> flat = Vector<double>::Constant(5, 1.0);
  CHECK(oscillation_count(flat) == 0);
  Vector<double> mono(4);
  mono << 0, 1, 2, 5;
  CHECK(oscillation_count(mono) == 0);
  Vector<double> zig(5);
  zig << 0, 1, 0, 1, 0;
  CHECK(oscillation_count(zig) == 3);
  Vector<double> plateau(5);
  plateau << 0, 1, 1, 2, 1;  // zero difference does not reset the trend
  CHECK(oscillation_count(plateau) == 1);
}

TEST_CASE("dense oracle agrees with the band solver") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> adist(0.05, 0.95);
  const auto names = {"zero", "constant", "example41", "example42_case1", "example42_case2_demo"};
  for (const char* name : names) {
    const auto p = make_problem<double>(name, adist(rng));
    const auto g = build_grid(p.spec, 1 + Index(rng() % 16), 1 + Index(rng() % 32));
    const auto fast = run(p.spec, g);
    const auto slow = dense_oracle_run(p.spec, g);
    const double scale = std::max(1e-30, slow.values.cwiseAbs().maxCoeff());
    CHECK((fast.values - slow.values).cwiseAbs().maxCoeff() / scale <= 1e-12);
  }
}

TEST_CASE("dense oracle reproduces the hand-solved scalar step") {
  ProblemSpec<double> spec;
  spec.alpha = 0.5;
  spec.k_alpha = 1.0;
  spec.drift = [](double) { return 0.0; };
  spec.initial = [](double x) { return (x == 0.0 || x == 1.0) ? 0.0 : 1.0; };
  spec.boundary_left = [](double) { return 0.0; };
  spec.boundary_right = [](double) { return 0.0; };
  const auto g = build_grid(spec, Index(1), Index(1));
  const auto field = dense_oracle_run(spec, g);
  CHECK(field.values(1, 1) == doctest::Approx(0.12361221487850868).epsilon(1e-13));
}

TEST_CASE("dense oracle rejects grids beyond its scale") {
  const auto p = zero_problem<double>();
  CHECK_THROWS_AS(dense_oracle_run(p.spec, build_grid(p.spec, Index(65), Index(4))),
                  std::invalid_argument);
  CHECK_THROWS_AS(dense_oracle_run(p.spec, build_grid(p.spec, Index(4), Index(257))),
                  std::invalid_argument);
}
