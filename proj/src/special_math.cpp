// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/special_math.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace secsim {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;

void check_order(int n) {
  if (n < 1 || n > kMaxExpIntOrder)
    throw std::domain_error("exponential integral order must be in [1, " +
                            std::to_string(kMaxExpIntOrder) + "], got " +
                            std::to_string(n));
}

// E_1(x) for 0 < x < 1:  -gamma - ln x + sum_k (-1)^(k+1) x^k / (k k!)
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;  // x^k / k!
  for (int k = 1; k <= 64; ++k) {
    term *= x / k;
    const double contrib = term / k;
    sum += (k & 1) ? contrib : -contrib;
    if (contrib < 1e-18) break;
  }
  return sum - kEulerGamma - std::log(x);
}

// e^x E_n(x) by the order-n continued fraction (modified Lentz), x >= 1.
double expint_cf_scaled(int n, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  double b = x + n;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double a = -static_cast<double>(i) * (n - 1.0 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("exp_int: continued fraction did not converge");
}

}  // namespace

ExpIntOrder::ExpIntOrder(int order) : n(order) { check_order(order); }

GammaParams::GammaParams(int shape_in, double scale_in)
    : shape(shape_in), scale(scale_in) {
  if (shape < 1) throw std::invalid_argument("gamma shape must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("gamma scale must be positive and finite");
}

double exp_int_scaled(int n, double x) {
  check_order(n);
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("exp_int requires finite x >= 0");
  if (x == 0.0) {
    if (n == 1) throw std::domain_error("E_1 diverges at x = 0");
    return 1.0 / (n - 1);
  }
  if (x >= 1.0) return expint_cf_scaled(n, x);
  double f = std::exp(x) * e1_series(x);
  for (int k = 1; k < n; ++k) f = (1.0 - x * f) / k;
  return f;
}

double exp_int(int n, double x) { return std::exp(-x) * exp_int_scaled(n, x); }

double exp_int(ExpIntOrder n, double x) { return exp_int(n.n, x); }

double gamma_log_integral(double alpha, int shape) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("gamma_log_integral requires finite alpha > 0");
  check_order(shape);
  const double x = 1.0 / alpha;
  double sum = 0.0;
  if (x >= 1.0) {
    for (int n = 1; n <= shape; ++n) sum += expint_cf_scaled(n, x);
  } else {
    double f = std::exp(x) * e1_series(x);
    sum = f;
    for (int k = 1; k < shape; ++k) {
      f = (1.0 - x * f) / k;
      sum += f;
    }
  }
  return sum / std::numbers::ln2;
}

namespace {

// 15-point Kronrod / 7-point Gauss nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct QuadCell {
  double a = 0.0, b = 0.0;
  double integral = 0.0;
  double error = 0.0;
};

template <class F>
QuadCell gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kron * half, std::abs((kron - gauss) * half)};
}

struct WorseError {
  bool operator()(const QuadCell& lhs, const QuadCell& rhs) const {
    return lhs.error < rhs.error;
  }
};

}  // namespace

double quad_log_gamma_oracle(double alpha, int shape, double rel_tol) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("quad_log_gamma_oracle requires finite alpha > 0");
  check_order(shape);
  if (!(rel_tol >= 1e-12))
    throw std::invalid_argument("quad_log_gamma_oracle: rel_tol below 1e-12");

  const double log_gamma_shape = std::lgamma(static_cast<double>(shape));
  const auto integrand = [=](double x) {
    if (x <= 0.0) return 0.0;
    const double weight = std::exp((shape - 1) * std::log(x) - x - log_gamma_shape);
    return std::log2(1.0 + alpha * x) * weight;
  };

  // Past this point the Gamma weight is below ~1e-70 of its peak.
  const double upper = shape + 50.0 * std::sqrt(static_cast<double>(shape)) + 60.0;

  std::priority_queue<QuadCell, std::vector<QuadCell>, WorseError> cells;
  QuadCell whole = gk15(integrand, 0.0, upper);
  double total = whole.integral;
  double total_error = whole.error;
  cells.push(whole);

  constexpr int kMaxSplits = 4000;
  int splits = 0;
  while (total_error > std::max(rel_tol * std::abs(total), 1e-300)) {
    if (splits++ >= kMaxSplits)
      throw std::runtime_error(
          "quad_log_gamma_oracle: adaptive refinement exceeded the iteration cap");
    const QuadCell worst = cells.top();
    cells.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const QuadCell left = gk15(integrand, worst.a, mid);
    const QuadCell right = gk15(integrand, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_error += left.error + right.error - worst.error;
    cells.push(left);
    cells.push(right);
  }
  return total;
}

double sample_gamma(const GammaParams& params, RandomStream& rng) {
  return rng.gamma_int(params.shape, params.scale);
}

}  // namespace secsim
