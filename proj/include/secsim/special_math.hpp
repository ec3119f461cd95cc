// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "secsim/rng.hpp"

namespace secsim {

/// Highest supported exponential integral order. The closed-form capacity
/// expressions only ever need orders up to the antenna count.
inline constexpr int kMaxExpIntOrder = 64;

struct ExpIntOrder {
  int n;
  explicit ExpIntOrder(int order);  // requires 1 <= order <= kMaxExpIntOrder
};

struct GammaParams {
  int shape;     // integer shape (an antenna count in this codebase)
  double scale;  // channel variance
  GammaParams(int shape_in, double scale_in);  // shape >= 1, scale > 0
};

/// Exponential integral E_n(x) = \int_1^inf t^-n e^-xt dt.
///
/// E_1 uses a power series below x = 1 and a continued fraction above it.
/// Higher orders come from the upward recurrence
///   E_{n+1}(x) = (e^-x - x E_n(x)) / n
/// on the x < 1 branch, where the recurrence's error amplification
/// x^(n-1)/(n-1)! stays below 1; for x >= 1 each order is evaluated
/// directly by the order-n continued fraction, which is stable for all n.
/// Absolute error is below 1e-10 over the supported domain.
double exp_int(int n, double x);
double exp_int(ExpIntOrder n, double x);

/// e^x E_n(x). Finite for large x where exp_int itself underflows; this is
/// the form the capacity closed form actually consumes.
double exp_int_scaled(int n, double x);

/// E[log2(1 + alpha X)] for X ~ Gamma(shape, 1):
///   (1/ln 2) e^(1/alpha) sum_{n=1}^{shape} E_n(1/alpha).
double gamma_log_integral(double alpha, int shape);

/// The same expectation by adaptive Gauss-Kronrod 15(7) quadrature of
///   \int_0^inf log2(1 + alpha x) x^(shape-1) e^-x / Gamma(shape) dx.
/// Independent of the closed-form path above; serves as its oracle.
/// Throws std::runtime_error if refinement exceeds the iteration cap.
double quad_log_gamma_oracle(double alpha, int shape, double rel_tol = 1e-10);

/// Gamma variate with the given integer shape and scale.
double sample_gamma(const GammaParams& params, RandomStream& rng);

}  // namespace secsim
