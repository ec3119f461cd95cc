// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "secsim/config.hpp"
#include "secsim/rng.hpp"
#include "secsim/secrecy_model.hpp"

namespace secsim {

enum class CurveMethod { closed_form, monte_carlo };

/// E[C_w] tabulated over an allocation-ratio grid. The expectation depends
/// only on the scenario statistics, never on the instantaneous main channel,
/// so one curve is built per scenario and shared by all outage trials.
struct ExpectedWiretapCurve {
  std::vector<double> grid;        // allocation ratios, uniform, includes 0 and 1
  std::vector<double> values;      // E[C_w] in bits
  std::vector<double> std_errors;  // zero for the closed form
  CurveMethod method = CurveMethod::closed_form;
  std::uint64_t mc_samples = 0;  // per grid point; 0 for the closed form
  std::uint64_t config_digest = 0;

  /// Piecewise-linear interpolation; ratio is clamped to [0, 1].
  double value_at(double ratio) const;
};

/// Digest over the fields E[C_w] depends on (scheme, antenna counts, power,
/// rho2 and the eavesdropper-side variances). Deliberately excludes the
/// target rate and the Bob-side variances so curves can be reused across
/// sweeps of those parameters.
std::uint64_t curve_config_digest(const SystemConfig& config);

/// Closed form C_w1 - C_w2 for the traditional scheme, each term a
/// gamma_log_integral. The degenerate alpha = 0 argument (phi = 1 or
/// rho2 = 1 in C_w2, or rho2 = 0 everywhere) contributes 0 analytically.
double expected_cw_traditional(AllocationRatio phi, const SystemConfig& config);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo mean of log2(1 + SNR_E) over g_e draws; the simulation side
/// of the closed-form comparison.
McEstimate expected_cw_traditional_mc(AllocationRatio phi, const SystemConfig& config,
                                      std::uint64_t samples, RandomStream& rng);

/// Monte Carlo mean of log2(1 + SNR_E) over (g_e, j_r) draws for the relay
/// scheme, which has no closed form.
McEstimate expected_cw_relay(AllocationRatio lambda, const SystemConfig& config,
                             std::uint64_t samples, RandomStream& rng);

/// Tabulates E[C_w] on a uniform ratio grid: closed form for the
/// traditional scheme, Monte Carlo (one derived substream per grid point,
/// points evaluated concurrently) for the relay scheme. Deterministic in
/// (config, grid_resolution, mc_samples, seed) regardless of worker count.
ExpectedWiretapCurve build_curve(const SystemConfig& config, int grid_resolution,
                                 std::uint64_t mc_samples, std::uint64_t seed,
                                 unsigned workers = 0);

/// Monte Carlo tabulation for either scheme; used for validation and for
/// regenerating the closed-form-vs-simulation comparison data.
ExpectedWiretapCurve build_curve_monte_carlo(const SystemConfig& config,
                                             int grid_resolution,
                                             std::uint64_t mc_samples,
                                             std::uint64_t seed,
                                             unsigned workers = 0);

/// Columnar text dump: ratio,expected_cw,std_error with # metadata lines.
void write_curve(const ExpectedWiretapCurve& curve, const SystemConfig& config,
                 std::ostream& os);

}  // namespace secsim
