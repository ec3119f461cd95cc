// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line with the measured values and its runtime budget.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "secsim/allocation.hpp"
#include "secsim/channel_model.hpp"
#include "secsim/experiments.hpp"
#include "secsim/montecarlo.hpp"
#include "secsim/secrecy_model.hpp"
#include "secsim/special_math.hpp"
#include "secsim/wiretap_expectation.hpp"

using namespace secsim;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SystemConfig paper_config(Scheme scheme, int m, int n, double rho2,
                          double power_db = 3.0, double rs = 0.0) {
  SystemConfig cfg;
  cfg.scheme = scheme;
  cfg.alice_antennas = m;
  cfg.relay_antennas = n;
  cfg.power = db_to_linear(power_db);
  cfg.rho2 = rho2;
  cfg.target_rate = rs;
  return cfg;
}

double combined_sigma(const OutageEstimate& a, const OutageEstimate& b) {
  return std::hypot(a.ci95_half_width / 1.96, b.ci95_half_width / 1.96);
}

double combined_ci(const OutageEstimate& a, const OutageEstimate& b) {
  return std::hypot(a.ci95_half_width, b.ci95_half_width);
}

// ---------------------------------------------------------------------------

Outcome criterion1_closed_form_vs_oracle() {
  double worst = 0.0;
  for (double alpha : {0.1, 1.0, 10.0, 100.0})
    for (int shape : {1, 2, 4, 8})
      worst = std::max(worst, std::abs(gamma_log_integral(alpha, shape) -
                                       quad_log_gamma_oracle(alpha, shape)));
  return {worst <= 1e-8, fmt("max |closed - quadrature| = %.3g (limit 1e-8)", worst)};
}

Outcome criterion2_expectation_curve() {
  const SystemConfig cfg = paper_config(Scheme::traditional_alice_an, 4, 2, 0.9);
  RandomStream rng(0xf1602);
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const AllocationRatio phi(i / 10.0);
    const double closed = expected_cw_traditional(phi, cfg);
    const McEstimate mc = expected_cw_traditional_mc(phi, cfg, 1000000, rng);
    if (mc.std_error == 0.0) {
      if (closed != mc.value) return {false, fmt("phi=%.1f: exact-zero point mismatch", phi.value)};
      continue;
    }
    worst = std::max(worst, std::abs(closed - mc.value) / mc.std_error);
  }
  return {worst <= 3.0,
          fmt("worst closed-vs-MC deviation = %.2f sigma (limit 3)", worst)};
}

Outcome criterion3_collinear_anchor() {
  // depends on the non-strict outage convention: the zero-margin point
  // (ratio 0 at Rs = 0) counts as an outage
  std::string detail;
  bool pass = true;
  for (int m : {2, 4, 8}) {
    const SystemConfig cfg = paper_config(Scheme::traditional_alice_an, m, 2, 1.0);
    const ExpectedWiretapCurve curve = build_curve(cfg, 101, 100000, 0xc3);
    const OutageEstimate est = estimate_outage(cfg, curve, 1000000, 0xa3 + m);
    pass = pass && std::abs(est.p_out - 0.63) <= 0.03;
    detail += fmt("M=%d: %.4f ", m, est.p_out);
  }
  return {pass, detail + "(target 0.63 +- 0.03)"};
}

Outcome criterion4_relay_dominance() {
  bool pass = true;
  std::string detail;
  int idx = 0;
  for (const auto& [m, n] :
       std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {8, 2}, {8, 4}, {8, 8}}) {
    for (double rho2 : {0.8, 0.9, 1.0}) {
      const SystemConfig trad =
          paper_config(Scheme::traditional_alice_an, m, n, rho2);
      const SystemConfig relay = paper_config(Scheme::relay_jamming, m, n, rho2);
      const ExpectedWiretapCurve trad_curve =
          build_curve(trad, 101, 100000, 0xc4);
      const ExpectedWiretapCurve relay_curve =
          build_curve(relay, 101, 100000, 0xc4 + idx);
      const OutageEstimate pt = estimate_outage(trad, trad_curve, 100000, 0xa40 + idx);
      const OutageEstimate pr =
          estimate_outage(relay, relay_curve, 100000, 0xa41 + idx);
      const bool ok = pr.p_out <= pt.p_out + 2.0 * combined_ci(pt, pr);
      if (!ok)
        detail += fmt("VIOLATION M=%d N=%d rho2=%.1f: relay %.4f > trad %.4f; ", m,
                      n, rho2, pr.p_out, pt.p_out);
      pass = pass && ok;
      ++idx;
    }
  }
  if (pass) detail = "relay <= traditional + 2 CI at all 15 configurations";
  return {pass, detail};
}

// Reference target: outage at full correlation stays within 0.03 across
// 0..20 dB. The exact allocation search provably violates this: as power
// grows, log2(1 + r P g_b) outruns the expectation curve at small ratios,
// the keep-silent threshold on g_b falls from ~E[g_e] toward the geometric
// mean, and p_out drifts down by ~0.08-0.12. Only a search restricted to a
// coarse ratio grid reproduces the flat curve. The check is kept as stated
// and reports the measured spreads.
Outcome criterion5_flatness_at_full_correlation() {
  bool pass = true;
  std::string detail;
  for (int m : {2, 4, 8}) {
    double lo = 1.0, hi = 0.0;
    for (double power_db : {0.0, 10.0, 20.0}) {
      const SystemConfig cfg =
          paper_config(Scheme::traditional_alice_an, m, 2, 1.0, power_db);
      const ExpectedWiretapCurve curve = build_curve(cfg, 101, 100000, 0xc5);
      const OutageEstimate est =
          estimate_outage(cfg, curve, 100000, 0xa5 + m + static_cast<int>(power_db));
      lo = std::min(lo, est.p_out);
      hi = std::max(hi, est.p_out);
    }
    pass = pass && (hi - lo) < 0.03;
    detail += fmt("M=%d spread=%.4f ", m, hi - lo);
  }
  return {pass, detail + "(limit 0.03 across 0/10/20 dB)"};
}

Outcome criterion6_monotonicity_and_rate_limit() {
  bool pass = true;
  std::string detail;

  const auto run_grid = [&](Scheme scheme, SweepAxis axis,
                            const std::vector<double>& grid, bool non_decreasing) {
    std::vector<OutageEstimate> ests;
    int idx = 0;
    for (double value : grid) {
      SystemConfig cfg = paper_config(scheme, 4, 2, 0.9);
      if (axis == SweepAxis::rho2) cfg.rho2 = value;
      if (axis == SweepAxis::power_db) cfg.power = db_to_linear(value);
      if (axis == SweepAxis::target_rate) cfg.target_rate = value;
      const ExpectedWiretapCurve curve =
          build_curve(cfg, 101, 100000, 0xc6 + idx);
      ests.push_back(estimate_outage(cfg, curve, 100000, 0xa6 + idx));
      ++idx;
    }
    for (std::size_t i = 1; i < ests.size(); ++i) {
      const double slack = 2.0 * combined_ci(ests[i - 1], ests[i]);
      const bool ok = non_decreasing
                          ? ests[i].p_out >= ests[i - 1].p_out - slack
                          : ests[i].p_out <= ests[i - 1].p_out + slack;
      if (!ok) {
        pass = false;
        detail += fmt("VIOLATION %s %s[%zu]: %.4f vs %.4f; ",
                      to_string(scheme).c_str(), to_string(axis).c_str(), i,
                      ests[i - 1].p_out, ests[i].p_out);
      }
    }
  };

  for (Scheme scheme : {Scheme::traditional_alice_an, Scheme::relay_jamming}) {
    run_grid(scheme, SweepAxis::rho2, {0.0, 0.25, 0.5, 0.75, 1.0}, true);
    run_grid(scheme, SweepAxis::target_rate, {0.0, 0.25, 0.5, 0.75, 1.0}, true);
    run_grid(scheme, SweepAxis::power_db, {0.0, 5.0, 10.0, 15.0, 20.0}, false);
  }
  if (pass) detail = "p_out monotone on all six (scheme, axis) grids; ";

  // Reference target: p_out > 0.95 at a 1-bit target rate for both schemes.
  // With base-2 rates the measured values sit near 0.80-0.92; the target is
  // only reached around Rs = 1 nat (1.44 bits), so it likely stems from a
  // natural-log rate convention. Kept as stated; measured minima reported.
  for (Scheme scheme : {Scheme::traditional_alice_an, Scheme::relay_jamming}) {
    double worst = 1.0;
    for (int m : {2, 4, 8}) {
      const SystemConfig cfg = paper_config(scheme, m, 2, 0.9, 3.0, 1.0);
      const ExpectedWiretapCurve curve = build_curve(cfg, 101, 100000, 0xc66);
      const OutageEstimate est = estimate_outage(cfg, curve, 100000, 0xa66 + m);
      worst = std::min(worst, est.p_out);
    }
    pass = pass && worst > 0.95;
    detail += fmt("min p_out(Rs=1, %s) = %.4f ", to_string(scheme).c_str(), worst);
  }
  return {pass, detail + "(rate limit target > 0.95)"};
}

Outcome criterion7_distributional_suite() {
  RandomStream rng(0x7777);
  std::string detail;

  // constructed correlation, beamformer identity, scalar/vector SNR agreement
  double worst_rho = 0.0, worst_beam = 0.0, worst_snr = 0.0;
  for (double rho2 : {0.0, 0.3, 0.9, 1.0}) {
    SystemConfig cfg = paper_config(Scheme::traditional_alice_an, 4, 2, rho2);
    for (int rep = 0; rep < 20000; ++rep) {
      const ChannelRealization ch = sample_main_pair(cfg, rng);
      worst_rho = std::max(worst_rho, std::abs(ch.rho2_realized - rho2));
      const double beam = std::norm(hdot(ch.h_ae, ch.h_ab)) / ch.g_b;
      worst_beam = std::max(worst_beam, std::abs(beam - rho2 * ch.g_e));
      const AllocationRatio phi(0.4);
      const double num = phi.value * cfg.power * beam;
      const double den = 1.0 + (1.0 - phi.value) / (cfg.alice_antennas - 1) *
                                   (1.0 - rho2) * cfg.power * norm2(ch.h_ae);
      worst_snr = std::max(
          worst_snr,
          std::abs(num / den - snr_traditional(phi, cfg, ch.g_b, ch.g_e).eve));
    }
  }
  bool pass = worst_rho < 1e-10 && worst_beam < 1e-10 && worst_snr < 1e-10;
  detail += fmt("rho2 err %.1e, beam err %.1e, snr err %.1e; ", worst_rho,
                worst_beam, worst_snr);

  // Gamma moments for g_b, g_e, j_r
  {
    const SystemConfig cfg = paper_config(Scheme::relay_jamming, 4, 4, 0.9);
    const int n = 400000;
    double sb = 0.0, se = 0.0, sj = 0.0;
    for (int i = 0; i < n; ++i) {
      const ChannelRealization ch = sample_realization(cfg, rng);
      sb += ch.g_b;
      se += ch.g_e;
      sj += ch.jam_gain;
    }
    const double mb = sb / n, me = se / n, mj = sj / n;
    const bool ok = std::abs(mb - 2.0) < 0.02 && std::abs(me - 2.0) < 0.02 &&
                    std::abs(mj - 1.5) < 0.02;
    pass = pass && ok;
    detail += fmt("means g_b %.3f g_e %.3f j_r %.3f; ", mb, me, mj);
  }

  // rho_R^2 ~ Beta(1, 1) = U[0,1] at N = 2 (KS, 1% level)
  {
    const SystemConfig cfg = paper_config(Scheme::relay_jamming, 4, 2, 0.9);
    const std::size_t n = 100000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = sample_relay_channels(cfg, rng).rho_r2;
    std::sort(samples.begin(), samples.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ks = std::max(ks, std::abs(samples[i] - static_cast<double>(i + 1) / n));
      ks = std::max(ks, std::abs(samples[i] - static_cast<double>(i) / n));
    }
    const double critical = 1.6276 / std::sqrt(static_cast<double>(n));
    pass = pass && ks < critical;
    detail += fmt("KS %.5f < %.5f; ", ks, critical);
  }

  // null-space orthogonality
  {
    double worst = 0.0;
    const SystemConfig cfg = paper_config(Scheme::traditional_alice_an, 8, 2, 0.9);
    for (int rep = 0; rep < 200; ++rep) {
      const ChannelRealization ch = sample_main_pair(cfg, rng);
      const auto basis = null_space_basis(ch.h_ab);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        worst = std::max(worst,
                         std::abs(hdot(ch.h_ab, basis[i])) / std::sqrt(ch.g_b));
        for (std::size_t j = i; j < basis.size(); ++j)
          worst = std::max(worst, std::abs(hdot(basis[i], basis[j]) -
                                           (i == j ? 1.0 : 0.0)));
      }
    }
    pass = pass && worst < 1e-10;
    detail += fmt("null-space err %.1e", worst);
  }
  return {pass, detail};
}

Outcome criterion8_fast_vs_slow() {
  std::string detail;
  bool pass = true;
  const SystemConfig configs[2] = {
      paper_config(Scheme::traditional_alice_an, 4, 2, 0.9),
      paper_config(Scheme::relay_jamming, 8, 2, 0.9)};
  for (const SystemConfig& cfg : configs) {
    const ExpectedWiretapCurve curve = build_curve(cfg, 101, 100000, 0xc8);
    const OutageEstimate fast = estimate_outage(cfg, curve, 100000, 0xa81);
    const OutageEstimate slow = estimate_outage_slow_oracle(cfg, 1000, 10000, 0xa82);
    const double diff = std::abs(fast.p_out - slow.p_out);
    const double limit = 3.0 * combined_sigma(fast, slow);
    pass = pass && diff <= limit;
    detail += fmt("%s: fast %.4f slow %.4f diff %.4f (3sigma %.4f); ",
                  to_string(cfg.scheme).c_str(), fast.p_out, slow.p_out, diff, limit);
  }
  return {pass, detail};
}

Outcome criterion9_preset_determinism() {
  const SweepSpec spec = preset_spec("fig4");
  SweepOptions one;
  one.workers = 1;
  SweepOptions four;
  four.workers = 4;
  const std::string a = csv_string(run_sweep(spec, one));
  const std::string b = csv_string(run_sweep(spec, four));
  const auto data = [](const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line))
      if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
  };
  const auto rows_a = data(a);
  const auto rows_b = data(b);
  const bool pass = rows_a == rows_b && rows_a.size() == 67;  // header + 66 rows
  return {pass, fmt("fig4 with 1 vs 4 workers: %zu data lines, byte-identical: %s",
                    rows_a.size(), rows_a == rows_b ? "yes" : "NO")};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  unsigned workers = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
      workers = static_cast<unsigned>(std::atoi(argv[++i]));
  }
  (void)workers;

  const std::vector<Criterion> criteria = {
      {1, "closed-form expectation vs quadrature oracle", 5.0,
       criterion1_closed_form_vs_oracle},
      {2, "expectation curve matches 1e6-sample Monte Carlo", 120.0,
       criterion2_expectation_curve},
      {3, "secrecy outage anchor 0.63 at full correlation", 300.0,
       criterion3_collinear_anchor},
      {4, "relay scheme dominates under high correlation", 600.0,
       criterion4_relay_dominance},
      {5, "outage flat in transmit power at full correlation", 120.0,
       criterion5_flatness_at_full_correlation},
      {6, "monotonicity suite and high-rate limit", 600.0,
       criterion6_monotonicity_and_rate_limit},
      {7, "distributional property suite", 60.0, criterion7_distributional_suite},
      {8, "cached-curve vs nested Monte Carlo outage", 600.0,
       criterion8_fast_vs_slow},
      {9, "preset sweep determinism across worker counts", 300.0,
       criterion9_preset_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& err) {
      outcome = {false, std::string("exception: ") + err.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed < criterion.time_limit_s;
    const bool pass = outcome.pass && in_budget;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s -- %s [%.1f s / %.0f s]\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.title.c_str(),
                outcome.detail.c_str(), elapsed, criterion.time_limit_s);
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
