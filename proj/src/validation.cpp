// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "secsim/allocation.hpp"
#include "secsim/channel_model.hpp"
#include "secsim/montecarlo.hpp"
#include "secsim/secrecy_model.hpp"
#include "secsim/special_math.hpp"
#include "secsim/wiretap_expectation.hpp"

namespace secsim {

namespace {

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SystemConfig reference_traditional() {
  SystemConfig cfg;
  cfg.scheme = Scheme::traditional_alice_an;
  cfg.alice_antennas = 4;
  cfg.relay_antennas = 2;
  cfg.power = db_to_linear(3.0);
  cfg.rho2 = 0.9;
  return cfg;
}

SystemConfig reference_relay() {
  SystemConfig cfg = reference_traditional();
  cfg.scheme = Scheme::relay_jamming;
  cfg.alice_antennas = 8;
  cfg.relay_antennas = 2;
  return cfg;
}

// --- deterministic special-function checks -------------------------------

ValidationCheck check_exp_int_at_zero() {
  double worst = 0.0;
  for (int n = 2; n <= 16; ++n)
    worst = std::max(worst, std::abs(exp_int(n, 0.0) - 1.0 / (n - 1)));
  return {"exp_int(n, 0) = 1/(n-1)", worst == 0.0, fmt("max |err| = %.3g", worst)};
}

ValidationCheck check_exp_int_recurrence() {
  double worst = 0.0;
  for (double x = 0.01; x <= 50.0; x *= 1.25) {
    const double ex = std::exp(-x);
    for (int n = 1; n <= 16; ++n) {
      const double res =
          std::abs(n * exp_int(n + 1, x) - ex + x * exp_int(n, x));
      worst = std::max(worst, res);
    }
  }
  return {"exp_int recurrence residual < 1e-12", worst < 1e-12,
          fmt("max residual = %.3g", worst)};
}

ValidationCheck check_exp_int_monotone() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    double prev = exp_int(n, n == 1 ? 0.01 : 0.0);
    for (double x = 0.05; x <= 30.0; x += 0.37) {
      const double cur = exp_int(n, x);
      ok = ok && cur < prev;
      prev = cur;
    }
  }
  return {"exp_int strictly decreasing in x", ok, ok ? "all grids" : "violated"};
}

ValidationCheck check_gamma_log_monotone() {
  bool ok = true;
  for (int shape : {1, 2, 4, 8}) {
    double prev = -1.0;
    for (double alpha : {0.01, 0.1, 0.5, 1.0, 5.0, 25.0, 200.0}) {
      const double cur = gamma_log_integral(alpha, shape);
      ok = ok && cur > prev;
      prev = cur;
    }
  }
  for (double alpha : {0.1, 1.0, 10.0}) {
    double prev = -1.0;
    for (int shape : {1, 2, 3, 5, 8, 16}) {
      const double cur = gamma_log_integral(alpha, shape);
      ok = ok && cur > prev;
      prev = cur;
    }
  }
  return {"gamma_log_integral monotone in alpha and shape", ok,
          ok ? "all grids" : "violated"};
}

// --- statistical channel checks ------------------------------------------

ValidationCheck check_gamma_moments() {
  RandomStream rng(0x9a11);
  const GammaParams params(4, 0.5);
  const int n = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_gamma(params, rng);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  const bool ok = std::abs(mean - 2.0) < 0.01 && std::abs(var - 1.0) < 0.02;
  return {"gamma sample moments (shape 4, scale 0.5)", ok,
          fmt("mean = %.4f (2 +- 0.01), var = %.4f (1 +- 0.02)", mean, var)};
}

ValidationCheck check_main_pair_construction() {
  SystemConfig cfg = reference_traditional();
  RandomStream rng(0xc081);
  double worst_rho = 0.0, worst_beam = 0.0;
  double sum_b = 0.0, sum_e = 0.0, sum_be = 0.0, sum_b2 = 0.0, sum_e2 = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const ChannelRealization ch = sample_main_pair(cfg, rng);
    worst_rho = std::max(worst_rho, std::abs(ch.rho2_realized - cfg.rho2));
    // beamformer f = h_ab/|h_ab|: |h_ae^H f|^2 must equal rho2 g_e
    const double beam = std::norm(hdot(ch.h_ae, ch.h_ab)) / ch.g_b;
    worst_beam = std::max(worst_beam, std::abs(beam - cfg.rho2 * ch.g_e));
    sum_b += ch.g_b;
    sum_e += ch.g_e;
    sum_be += ch.g_b * ch.g_e;
    sum_b2 += ch.g_b * ch.g_b;
    sum_e2 += ch.g_e * ch.g_e;
  }
  const double corr =
      (sum_be / n - sum_b / n * sum_e / n) /
      std::sqrt((sum_b2 / n - sum_b / n * sum_b / n) *
                (sum_e2 / n - sum_e / n * sum_e / n));
  const bool ok = worst_rho < 1e-10 && worst_beam < 1e-10 && std::abs(corr) < 0.02;
  return {"constructed correlation, beamformer identity, g_b/g_e independence", ok,
          fmt("max |rho2 err| = %.2g, max |beam err| = %.2g, corr = %.4f", worst_rho,
              worst_beam, corr)};
}

ValidationCheck check_null_space() {
  RandomStream rng(0xba515);
  SystemConfig cfg = reference_traditional();
  cfg.alice_antennas = 8;
  double worst_orth = 0.0, worst_member = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ChannelRealization ch = sample_main_pair(cfg, rng);
    const auto basis = null_space_basis(ch.h_ab);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      worst_member = std::max(
          worst_member, std::abs(hdot(ch.h_ab, basis[i])) / std::sqrt(ch.g_b));
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double expect = i == j ? 1.0 : 0.0;
        worst_orth = std::max(worst_orth,
                              std::abs(hdot(basis[i], basis[j]) - expect));
      }
    }
  }
  const bool ok = worst_orth < 1e-10 && worst_member < 1e-10;
  return {"null-space basis orthonormal and orthogonal to h", ok,
          fmt("max |Z^H Z - I| = %.2g, max |h^H z|/|h| = %.2g", worst_orth,
              worst_member)};
}

ValidationCheck check_rho_r2_uniform() {
  // for N = 2 the squared correlation of two isotropic directions is U[0,1]
  SystemConfig cfg = reference_relay();
  cfg.relay_antennas = 2;
  RandomStream rng(0xbe7a);
  const int n = 100000;
  std::vector<double> samples(n);
  for (int i = 0; i < n; ++i)
    samples[static_cast<std::size_t>(i)] = sample_relay_channels(cfg, rng).rho_r2;
  std::sort(samples.begin(), samples.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = samples[static_cast<std::size_t>(i)];
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
  }
  const double critical = 1.6276 / std::sqrt(static_cast<double>(n));  // 1% level
  return {"rho_R^2 ~ Uniform[0,1] for N = 2 (KS, 1% level)", ks < critical,
          fmt("D = %.5f, critical = %.5f", ks, critical)};
}

ValidationCheck check_scalar_vector_snr() {
  SystemConfig cfg = reference_traditional();
  RandomStream rng(0x5ca1a);
  double worst = 0.0;
  for (int rep = 0; rep < 10000; ++rep) {
    const ChannelRealization ch = sample_main_pair(cfg, rng);
    const AllocationRatio phi(0.35);
    // vector-side numerator with the AN denominator replaced by its average
    const double beam_gain = std::norm(hdot(ch.h_ae, ch.h_ab)) / ch.g_b;
    const double num = phi.value * cfg.power * beam_gain;
    const double den =
        1.0 + (1.0 - phi.value) / (cfg.alice_antennas - 1) * (1.0 - cfg.rho2) *
                  cfg.power * norm2(ch.h_ae);
    const LinkSnrs scalar = snr_traditional(phi, cfg, ch.g_b, ch.g_e);
    worst = std::max(worst, std::abs(num / den - scalar.eve));
    worst = std::max(
        worst, std::abs(phi.value * cfg.power * ch.g_b - scalar.bob));
  }
  return {"vector-form and sufficient-statistic SNRs agree", worst < 1e-10,
          fmt("max |diff| = %.2g", worst)};
}

ValidationCheck check_scheme_boundary() {
  SystemConfig trad = reference_traditional();
  SystemConfig relay = trad;
  relay.scheme = Scheme::relay_jamming;
  double worst = 0.0;
  for (double g_b : {0.2, 1.0, 3.7}) {
    for (double g_e : {0.1, 0.9, 4.2}) {
      const LinkSnrs a = snr_traditional(AllocationRatio(1.0), trad, g_b, g_e);
      const LinkSnrs b = snr_relay(AllocationRatio(1.0), relay, g_b, g_e, 1.3);
      worst = std::max({worst, std::abs(a.bob - b.bob), std::abs(a.eve - b.eve)});
    }
  }
  return {"relay with lambda = 1 equals traditional with phi = 1", worst == 0.0,
          fmt("max |diff| = %.2g", worst)};
}

ValidationCheck check_curve_shape() {
  const SystemConfig cfg = reference_traditional();
  const ExpectedWiretapCurve curve = build_curve(cfg, 101, 10000, 7);
  bool ok = curve.values.front() == 0.0;
  double worst_drop = 0.0;
  for (std::size_t i = 1; i < curve.values.size(); ++i)
    worst_drop = std::max(worst_drop, curve.values[i - 1] - curve.values[i]);
  ok = ok && worst_drop <= 0.0;
  return {"closed-form curve starts at 0 and is non-decreasing", ok,
          fmt("value(0) = %.3g, worst decrement = %.3g", curve.values.front(),
              worst_drop)};
}

ValidationCheck check_optimizer_against_bruteforce() {
  const SystemConfig cfg = reference_traditional();
  const ExpectedWiretapCurve curve = build_curve(cfg, 101, 10000, 7);
  double worst_short = 0.0;
  for (double g_b : {0.05, 0.4, 1.1, 2.0, 6.5}) {
    const AllocationResult res = optimize_ratio(g_b, curve, cfg);
    double brute = -1e300;
    const int fine = 100000;
    for (int i = 0; i <= fine; ++i) {
      const double r = static_cast<double>(i) / fine;
      brute = std::max(brute,
                       std::log2(1.0 + r * cfg.power * g_b) - curve.value_at(r));
    }
    worst_short = std::max(worst_short, brute - res.objective);
  }
  return {"optimizer within 1e-4 bits of the exhaustive grid maximum",
          worst_short < 1e-4, fmt("max shortfall = %.2g bits", worst_short)};
}

ValidationCheck check_outage_determinism() {
  const SystemConfig cfg = reference_traditional();
  const ExpectedWiretapCurve curve = build_curve(cfg, 101, 10000, 7);
  OutageOptions one;
  one.workers = 1;
  OutageOptions many;
  many.workers = 4;
  const OutageEstimate a = estimate_outage(cfg, curve, 20000, 99, one);
  const OutageEstimate b = estimate_outage(cfg, curve, 20000, 99, many);
  const bool ok = a.p_out == b.p_out;
  return {"outage estimate invariant to worker count", ok,
          fmt("p(1 worker) = %.6f, p(4 workers) = %.6f", a.p_out, b.p_out)};
}

// --- full-level checks ----------------------------------------------------

ValidationCheck check_traditional_curve_vs_mc() {
  const SystemConfig cfg = reference_traditional();
  RandomStream rng(0xf162);
  double worst_sigmas = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const AllocationRatio phi(i / 10.0);
    const double closed = expected_cw_traditional(phi, cfg);
    const McEstimate mc = expected_cw_traditional_mc(phi, cfg, 1000000, rng);
    if (mc.std_error == 0.0) {
      if (closed != mc.value) worst_sigmas = 1e300;
      continue;
    }
    worst_sigmas = std::max(worst_sigmas, std::abs(closed - mc.value) / mc.std_error);
  }
  return {"closed-form E[C_w] within 3 std errors of 1e6-sample Monte Carlo",
          worst_sigmas <= 3.0, fmt("worst deviation = %.2f sigma", worst_sigmas)};
}

ValidationCheck check_relay_full_allocation_matches_closed_form() {
  const SystemConfig cfg = reference_relay();
  RandomStream rng(0x4e1a);
  const McEstimate mc = expected_cw_relay(AllocationRatio(1.0), cfg, 1000000, rng);
  const double closed = gamma_log_integral(
      cfg.rho2 * cfg.power * cfg.sigma2_ae, cfg.alice_antennas);
  const double sigmas = std::abs(mc.value - closed) / mc.std_error;
  return {"relay E[C_w] at lambda = 1 matches the no-AN closed form",
          sigmas <= 3.0, fmt("deviation = %.2f sigma", sigmas)};
}

ValidationCheck check_relay_curve_self_consistency() {
  const SystemConfig cfg = reference_relay();
  const ExpectedWiretapCurve coarse = build_curve(cfg, 101, 100000, 11);
  const ExpectedWiretapCurve fine = build_curve(cfg, 101, 10000000, 12);
  double worst_sigmas = 0.0;
  for (std::size_t i = 1; i < coarse.grid.size(); ++i) {
    const double se = std::sqrt(coarse.std_errors[i] * coarse.std_errors[i] +
                                fine.std_errors[i] * fine.std_errors[i]);
    worst_sigmas =
        std::max(worst_sigmas, std::abs(coarse.values[i] - fine.values[i]) / se);
  }
  return {"relay curve points within 4 std errors of a 1e7-sample re-estimate",
          worst_sigmas <= 4.0, fmt("worst deviation = %.2f sigma", worst_sigmas)};
}

ValidationCheck check_fast_vs_slow(const SystemConfig& cfg, const char* label) {
  const ExpectedWiretapCurve curve = build_curve(cfg, 101, 100000, 21);
  const OutageEstimate fast = estimate_outage(cfg, curve, 100000, 31);
  const OutageEstimate slow = estimate_outage_slow_oracle(cfg, 1000, 10000, 32);
  const double sigma = std::sqrt(std::pow(fast.ci95_half_width / 1.96, 2) +
                                 std::pow(slow.ci95_half_width / 1.96, 2));
  const double diff = std::abs(fast.p_out - slow.p_out);
  return {std::string("cached-curve vs nested-MC outage (") + label + ")",
          diff <= 3.0 * sigma,
          fmt("fast = %.4f, slow = %.4f, diff = %.4f (3 sigma = %.4f)", fast.p_out,
              slow.p_out, diff, 3.0 * sigma)};
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

ValidationCheck check_closed_form_vs_oracle(
    const std::function<double(double, int)>& closed_form) {
  double worst = 0.0;
  for (double alpha : {0.1, 1.0, 10.0, 100.0})
    for (int shape : {1, 2, 4, 8})
      worst = std::max(worst, std::abs(closed_form(alpha, shape) -
                                       quad_log_gamma_oracle(alpha, shape)));
  return {"gamma_log_integral matches the quadrature oracle to 1e-8",
          worst <= 1e-8, fmt("max |diff| = %.3g", worst)};
}

ValidationReport run_validation(ValidationLevel level, std::ostream* out) {
  ValidationReport report;
  const auto add = [&](ValidationCheck check) {
    if (out)
      *out << (check.passed ? "PASS " : "FAIL ") << check.name << " -- "
           << check.detail << "\n";
    report.checks.push_back(std::move(check));
  };

  add(check_exp_int_at_zero());
  add(check_exp_int_recurrence());
  add(check_exp_int_monotone());
  add(check_closed_form_vs_oracle(
      [](double alpha, int shape) { return gamma_log_integral(alpha, shape); }));
  add(check_gamma_log_monotone());
  add(check_gamma_moments());
  add(check_main_pair_construction());
  add(check_null_space());
  add(check_rho_r2_uniform());
  add(check_scalar_vector_snr());
  add(check_scheme_boundary());
  add(check_curve_shape());
  add(check_optimizer_against_bruteforce());
  add(check_outage_determinism());

  if (level == ValidationLevel::full) {
    add(check_traditional_curve_vs_mc());
    add(check_relay_full_allocation_matches_closed_form());
    add(check_relay_curve_self_consistency());
    add(check_fast_vs_slow(reference_traditional(), "traditional M=4 rho2=0.9"));
    add(check_fast_vs_slow(reference_relay(), "relay M=8 N=2 rho2=0.9"));
  }
  return report;
}

}  // namespace secsim
