// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace secsim {

namespace {

constexpr double kRatioTol = 1e-4;
// Refinements must beat the grid scan by more than rounding noise; a
// spurious move off an exact grid node (especially off 0) would change the
// outage indicator at the zero-margin point.
constexpr double kImproveTol = 1e-12;

struct Candidate {
  double ratio = 0.0;
  double objective = 0.0;
};

template <class F>
Candidate golden_max(const F& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > kRatioTol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

}  // namespace

AllocationResult optimize_ratio(double g_b, const ExpectedWiretapCurve& curve,
                                const SystemConfig& config) {
  if (curve.config_digest != curve_config_digest(config))
    throw std::invalid_argument(
        "optimize_ratio: curve was built for a different config");
  if (!(g_b >= 0.0) || !std::isfinite(g_b))
    throw std::invalid_argument("optimize_ratio: g_b must be finite and >= 0");

  const double pg = config.power * g_b;
  const auto objective = [&](double r) {
    return std::log2(1.0 + r * pg) - curve.value_at(r);
  };

  // Scan every grid node first (f is a difference of concave functions and
  // can have several local maxima); strict improvement keeps the smaller
  // ratio on ties.
  std::size_t best_idx = 0;
  double best_f = std::log2(1.0 + curve.grid[0] * pg) - curve.values[0];
  for (std::size_t i = 1; i < curve.grid.size(); ++i) {
    const double fi = std::log2(1.0 + curve.grid[i] * pg) - curve.values[i];
    if (fi > best_f) {
      best_f = fi;
      best_idx = i;
    }
  }

  // On each segment of the piecewise-linear curve f is concave, so
  // golden-section refinement of the two segments adjacent to the best node
  // is exact.
  Candidate chosen{curve.grid[best_idx], best_f};
  const auto consider = [&](const Candidate& cand) {
    if (cand.objective > chosen.objective + kImproveTol) chosen = cand;
  };
  if (best_idx > 0)
    consider(golden_max(objective, curve.grid[best_idx - 1], curve.grid[best_idx]));
  if (best_idx + 1 < curve.grid.size())
    consider(golden_max(objective, curve.grid[best_idx], curve.grid[best_idx + 1]));

  AllocationResult out{AllocationRatio(chosen.ratio), chosen.objective,
                       Boundary::interior};
  if (chosen.ratio == 0.0)
    out.boundary = Boundary::at_zero;
  else if (chosen.ratio == 1.0)
    out.boundary = Boundary::at_one;
  return out;
}

}  // namespace secsim
