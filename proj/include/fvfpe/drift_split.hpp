#pragma once

#include <algorithm>

#include "fvfpe/problem.hpp"
#include "fvfpe/types.hpp"

namespace fvfpe {

/// Drift decomposition f = f^m + f^u + f^l sampled at the half points x_{i+1/2}:
///   f^u = max(f - 2k/h, 0) >= 0   (upwinded from the left)
///   f^l = min(f + 2k/h, 0) <= 0   (upwinded from the right)
///   f^m = f - f^u - f^l,  |f^m| <= 2k/h  (central)
template <typename Scalar = double>
struct SplitDrift {
  Vector<Scalar> fm, fu, fl;  // length N+1, index i <-> x_{i+1/2}
  Scalar threshold{};         // 2 k_alpha / h
};

template <typename Scalar, typename DriftFn>
SplitDrift<Scalar> split_drift(DriftFn&& f, Scalar k_alpha, const Grid<Scalar>& grid) {
  const Index m = grid.n_interior + 1;
  SplitDrift<Scalar> s;
  s.threshold = Scalar(2) * k_alpha / grid.h;
  s.fm.resize(m);
  s.fu.resize(m);
  s.fl.resize(m);
  for (Index i = 0; i < m; ++i) {
    const Scalar fv = f(grid.half_points[i]);
    // branch form of fu = max(f - 2k/h, 0), fl = min(f + 2k/h, 0), fm = f - fu - fl;
    // keeps the saturation fm = +/- 2k/h and the bound |fm| <= 2k/h bitwise exact
    if (fv > s.threshold) {
      s.fu[i] = fv - s.threshold;
      s.fl[i] = Scalar(0);
      s.fm[i] = s.threshold;
    } else if (fv < -s.threshold) {
      s.fu[i] = Scalar(0);
      s.fl[i] = fv + s.threshold;
      s.fm[i] = -s.threshold;
    } else {
      s.fu[i] = Scalar(0);
      s.fl[i] = Scalar(0);
      s.fm[i] = fv;
    }
  }
  return s;
}

}  // namespace fvfpe
