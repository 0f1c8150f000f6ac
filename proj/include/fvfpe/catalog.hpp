#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvfpe/problem.hpp"

namespace fvfpe {

/// Manufactured-solution problem: when `exact` is present, the problem's
/// initial and boundary data are its traces, so discrete errors measure the
/// scheme alone.
template <typename Scalar = double>
struct CatalogProblem {
  std::string name;
  ProblemSpec<Scalar> spec;
  std::function<Scalar(Scalar, Scalar)> exact;  // w(x,t); empty when unknown
};

// All catalog problems live on [0,1] x (0,1] with k_alpha = 1. Sources are the
// closed forms of  g = D_t^alpha w - k w_xx + (f w)_x  for the chosen w; since
// every w here is t^2 u(x), the fractional term is Gamma(3)/Gamma(3-alpha)
// t^{2-alpha} u(x).

/// Convergence-study problem: w(x,t) = t^2 cos(pi x), f(x) = (x - x^2) + 400.
template <typename Scalar = double>
CatalogProblem<Scalar> example41(Scalar alpha = Scalar(0.5)) {
  using std::numbers::pi_v;
  const Scalar pi = pi_v<Scalar>;
  const Scalar k = 1;
  const Scalar gfac = std::tgamma(Scalar(3)) / std::tgamma(Scalar(3) - alpha);
  CatalogProblem<Scalar> p;
  p.name = "example41";
  p.spec.alpha = alpha;
  p.spec.k_alpha = k;
  p.spec.drift = [](Scalar x) { return (x - x * x) + Scalar(400); };
  p.spec.initial = [](Scalar) { return Scalar(0); };
  p.spec.boundary_left = [](Scalar t) { return t * t; };
  p.spec.boundary_right = [](Scalar t) { return -t * t; };
  p.spec.source = [=](Scalar x, Scalar t) {
    const Scalar c = std::cos(pi * x);
    const Scalar s = std::sin(pi * x);
    return gfac * std::pow(t, Scalar(2) - alpha) * c + k * pi * pi * t * t * c +
           t * t * ((1 - 2 * x) * c - (x - x * x + 400) * pi * s);
  };
  p.exact = [=](Scalar x, Scalar t) { return t * t * std::cos(pi * x); };
  return p;
}

/// Coarse-grid comparison problem with a right boundary layer:
/// w(x,t) = t^2 u(x), u(x) = 1 + (1 - e^{10x})/e^{10}, f(x) = (x - x^2) + 40.
/// u' = -10 e^{10x}/e^{10}, u'' = -100 e^{10x}/e^{10}; the right boundary value
/// is the exact trace t^2 e^{-10}.
template <typename Scalar = double>
CatalogProblem<Scalar> example42_case1(Scalar alpha = Scalar(0.5)) {
  const Scalar k = 1;
  const Scalar gfac = std::tgamma(Scalar(3)) / std::tgamma(Scalar(3) - alpha);
  const Scalar big_e = std::exp(Scalar(10));
  auto u = [=](Scalar x) { return 1 + (1 - std::exp(10 * x)) / big_e; };
  CatalogProblem<Scalar> p;
  p.name = "example42_case1";
  p.spec.alpha = alpha;
  p.spec.k_alpha = k;
  p.spec.drift = [](Scalar x) { return (x - x * x) + Scalar(40); };
  p.spec.initial = [](Scalar) { return Scalar(0); };
  p.spec.boundary_left = [](Scalar t) { return t * t; };
  p.spec.boundary_right = [=](Scalar t) { return t * t * u(Scalar(1)); };
  p.spec.source = [=](Scalar x, Scalar t) {
    const Scalar ex = std::exp(10 * x) / big_e;
    return gfac * std::pow(t, Scalar(2) - alpha) * u(x) + 100 * k * t * t * ex +
           t * t * ((1 - 2 * x) * u(x) - 10 * (x - x * x + 40) * ex);
  };
  p.exact = [=](Scalar x, Scalar t) { return t * t * u(x); };
  return p;
}

/// All-zero data with the case-1 drift; the exact solution is identically zero.
template <typename Scalar = double>
CatalogProblem<Scalar> example42_case2(Scalar alpha = Scalar(0.5)) {
  CatalogProblem<Scalar> p;
  p.name = "example42_case2";
  p.spec.alpha = alpha;
  p.spec.k_alpha = 1;
  p.spec.drift = [](Scalar x) { return (x - x * x) + Scalar(40); };
  p.spec.initial = [](Scalar) { return Scalar(0); };
  p.spec.boundary_left = [](Scalar) { return Scalar(0); };
  p.spec.boundary_right = [](Scalar) { return Scalar(0); };
  p.exact = [](Scalar, Scalar) { return Scalar(0); };
  return p;
}

/// Nonnegativity demonstration datum (a reconstruction: the all-zero case has
/// the zero solution, so a boundary inflow against the drift is used instead).
/// No exact solution is claimed.
template <typename Scalar = double>
CatalogProblem<Scalar> example42_case2_demo(Scalar alpha = Scalar(0.5)) {
  CatalogProblem<Scalar> p = example42_case2(alpha);
  p.name = "example42_case2_demo";
  p.spec.boundary_right = [](Scalar t) { return t * t; };
  p.exact = nullptr;
  return p;
}

template <typename Scalar = double>
CatalogProblem<Scalar> zero_problem(Scalar alpha = Scalar(0.5)) {
  CatalogProblem<Scalar> p;
  p.name = "zero";
  p.spec.alpha = alpha;
  p.spec.k_alpha = 1;
  p.spec.drift = [](Scalar) { return Scalar(0); };
  p.spec.initial = [](Scalar) { return Scalar(0); };
  p.spec.boundary_left = [](Scalar) { return Scalar(0); };
  p.spec.boundary_right = [](Scalar) { return Scalar(0); };
  p.exact = [](Scalar, Scalar) { return Scalar(0); };
  return p;
}

/// Constant state c with zero drift; preserved exactly by the scheme.
template <typename Scalar = double>
CatalogProblem<Scalar> constant_problem(Scalar c, Scalar alpha = Scalar(0.5)) {
  CatalogProblem<Scalar> p;
  p.name = "constant";
  p.spec.alpha = alpha;
  p.spec.k_alpha = 1;
  p.spec.drift = [](Scalar) { return Scalar(0); };
  p.spec.initial = [=](Scalar) { return c; };
  p.spec.boundary_left = [=](Scalar) { return c; };
  p.spec.boundary_right = [=](Scalar) { return c; };
  p.exact = [=](Scalar, Scalar) { return c; };
  return p;
}

template <typename Scalar = double>
std::vector<CatalogProblem<Scalar>> catalog() {
  return {zero_problem<Scalar>(),       constant_problem<Scalar>(1),
          example41<Scalar>(),          example42_case1<Scalar>(),
          example42_case2<Scalar>(),    example42_case2_demo<Scalar>()};
}

/// Lookup by name; alpha applies where the problem is parameterized by it.
template <typename Scalar = double>
CatalogProblem<Scalar> make_problem(const std::string& name, Scalar alpha = Scalar(0.5)) {
  if (name == "zero") return zero_problem(alpha);
  if (name == "constant") return constant_problem(Scalar(1), alpha);
  if (name == "example41") return example41(alpha);
  if (name == "example42_case1") return example42_case1(alpha);
  if (name == "example42_case2") return example42_case2(alpha);
  if (name == "example42_case2_demo") return example42_case2_demo(alpha);
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace fvfpe
