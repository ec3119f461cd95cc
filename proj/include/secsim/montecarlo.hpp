// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "secsim/config.hpp"
#include "secsim/wiretap_expectation.hpp"

namespace secsim {

struct OutageEstimate {
  double p_out = 0.0;
  std::uint64_t trials = 0;
  double ci95_half_width = 0.0;  // 1.96 sqrt(p (1-p) / trials), normal approx
  std::uint64_t seed = 0;

  /// Wilson score interval; preferable to the normal approximation when
  /// p_out is near 0 or 1 (roughly p_out < 0.01).
  std::pair<double, double> wilson_ci95() const;
};

struct TrialRecord {
  double g_b = 0.0;
  double g_e = 0.0;
  double jam_gain = 0.0;  // 0 for the traditional scheme
  double ratio = 0.0;
  bool outage = false;
};

struct OutageOptions {
  unsigned workers = 0;        // 0 -> hardware concurrency
  std::size_t trace_rows = 0;  // record the first trace_rows trials
};

/// Per trial: draw g_b, pick the allocation ratio against the cached curve,
/// draw the eavesdropper-side statistics, apply the outage indicator.
///
/// The trial index space is partitioned into fixed blocks, each running on
/// a substream derived from (seed, block), so the result is a deterministic
/// function of (config, curve, trials, seed) independent of worker count.
OutageEstimate estimate_outage(const SystemConfig& config,
                               const ExpectedWiretapCurve& curve,
                               std::uint64_t trials, std::uint64_t seed,
                               const OutageOptions& options = {},
                               std::vector<TrialRecord>* trace = nullptr);

/// Validation path: re-estimates E[C_w] by nested Monte Carlo inside every
/// trial instead of using a cached curve. Orders of magnitude slower;
/// statistically consistent with estimate_outage on matched configs.
OutageEstimate estimate_outage_slow_oracle(const SystemConfig& config,
                                           std::uint64_t trials,
                                           std::uint64_t inner_samples,
                                           std::uint64_t seed,
                                           const OutageOptions& options = {});

}  // namespace secsim
