// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/parallel_for.hpp"
#include "secsim/allocation.hpp"
#include "secsim/secrecy_model.hpp"

namespace secsim {

namespace {

// Trials are processed in fixed blocks, each on its own substream, so the
// estimate is invariant to the number of workers and their scheduling.
constexpr std::uint64_t kTrialBlock = 8192;

double normal_ci95_half_width(double p, std::uint64_t trials) {
  return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct BlockOutcome {
  std::uint64_t outages = 0;
  std::vector<TrialRecord> trace;
};

bool run_trial(const SystemConfig& config, const ExpectedWiretapCurve& curve,
               RandomStream& stream, TrialRecord* record) {
  const double g_b = stream.gamma_int(config.alice_antennas, config.sigma2_ab);
  const AllocationResult alloc = optimize_ratio(g_b, curve, config);
  const double g_e = stream.gamma_int(config.alice_antennas, config.sigma2_ae);
  double jam = 0.0;
  LinkSnrs snrs;
  if (config.scheme == Scheme::relay_jamming) {
    jam = stream.gamma_int(config.relay_antennas - 1, config.sigma2_re);
    snrs = snr_relay(alloc.ratio, config, g_b, g_e, jam);
  } else {
    snrs = snr_traditional(alloc.ratio, config, g_b, g_e);
  }
  const bool outage = outage_indicator(snrs, config.target_rate);
  if (record) *record = {g_b, g_e, jam, alloc.ratio.value, outage};
  return outage;
}

OutageEstimate reduce_blocks(std::vector<BlockOutcome>& blocks,
                             std::uint64_t trials, std::uint64_t seed,
                             std::vector<TrialRecord>* trace) {
  std::uint64_t outages = 0;
  for (auto& block : blocks) {
    outages += block.outages;
    if (trace)
      trace->insert(trace->end(), block.trace.begin(), block.trace.end());
  }
  OutageEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.p_out = static_cast<double>(outages) / static_cast<double>(trials);
  est.ci95_half_width = normal_ci95_half_width(est.p_out, trials);
  return est;
}

}  // namespace

std::pair<double, double> OutageEstimate::wilson_ci95() const {
  const double z = 1.96;
  const double n = static_cast<double>(trials);
  const double z2n = z * z / n;
  const double center = (p_out + z2n / 2.0) / (1.0 + z2n);
  const double half =
      z * std::sqrt(p_out * (1.0 - p_out) / n + z2n / (4.0 * n)) / (1.0 + z2n);
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

OutageEstimate estimate_outage(const SystemConfig& config,
                               const ExpectedWiretapCurve& curve,
                               std::uint64_t trials, std::uint64_t seed,
                               const OutageOptions& options,
                               std::vector<TrialRecord>* trace) {
  config.validate();
  if (trials < 1000)
    throw std::invalid_argument("estimate_outage needs >= 1e3 trials");
  if (curve.config_digest != curve_config_digest(config))
    throw std::invalid_argument("estimate_outage: curve/config mismatch");

  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<BlockOutcome> outcomes(blocks);
  const RandomStream root(seed);
  const std::size_t trace_rows = trace ? options.trace_rows : 0;

  detail::parallel_for(blocks, options.workers, [&](std::size_t b) {
    RandomStream stream = root.fork(b);
    const std::uint64_t begin = b * kTrialBlock;
    const std::uint64_t end = std::min(trials, begin + kTrialBlock);
    BlockOutcome& out = outcomes[b];
    for (std::uint64_t t = begin; t < end; ++t) {
      TrialRecord record;
      const bool want_record = t < trace_rows;
      if (run_trial(config, curve, stream, want_record ? &record : nullptr))
        ++out.outages;
      if (want_record) out.trace.push_back(record);
    }
  });
  return reduce_blocks(outcomes, trials, seed, trace);
}

OutageEstimate estimate_outage_slow_oracle(const SystemConfig& config,
                                           std::uint64_t trials,
                                           std::uint64_t inner_samples,
                                           std::uint64_t seed,
                                           const OutageOptions& options) {
  config.validate();
  if (trials < 100)
    throw std::invalid_argument("estimate_outage_slow_oracle needs >= 1e2 trials");
  if (inner_samples < 100)
    throw std::invalid_argument("estimate_outage_slow_oracle needs >= 1e2 inner samples");

  constexpr int kGrid = 101;
  const bool relay = config.scheme == Scheme::relay_jamming;
  const double p = config.power;
  const int m = config.alice_antennas;
  const int n = config.relay_antennas;

  ExpectedWiretapCurve proto;
  proto.config_digest = curve_config_digest(config);
  proto.method = CurveMethod::monte_carlo;
  proto.mc_samples = inner_samples;
  proto.grid.resize(kGrid);
  for (int i = 0; i < kGrid; ++i)
    proto.grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (kGrid - 1);
  proto.values.assign(kGrid, 0.0);
  proto.std_errors.assign(kGrid, 0.0);

  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<BlockOutcome> outcomes(blocks);
  const RandomStream root(seed);

  detail::parallel_for(blocks, options.workers, [&](std::size_t b) {
    RandomStream stream = root.fork(b);
    ExpectedWiretapCurve curve = proto;  // worker-local scratch curve
    std::vector<double> g_e_draw(inner_samples);
    std::vector<double> jam_draw(relay ? inner_samples : 0);
    const std::uint64_t begin = b * kTrialBlock;
    const std::uint64_t end = std::min(trials, begin + kTrialBlock);
    BlockOutcome& out = outcomes[b];
    for (std::uint64_t t = begin; t < end; ++t) {
      // Nested expectation, re-estimated for this trial. The inner draws
      // are shared across the ratio grid; every grid point remains an
      // unbiased estimate of E[C_w] at that ratio.
      for (std::uint64_t s = 0; s < inner_samples; ++s) {
        g_e_draw[s] = stream.gamma_int(m, config.sigma2_ae);
        if (relay) jam_draw[s] = stream.gamma_int(n - 1, config.sigma2_re);
      }
      for (int i = 0; i < kGrid; ++i) {
        const double r = proto.grid[static_cast<std::size_t>(i)];
        const double share =
            relay ? (1.0 - r) / (n - 1) : (1.0 - r) / (m - 1) * (1.0 - config.rho2);
        double acc = 0.0;
        for (std::uint64_t s = 0; s < inner_samples; ++s) {
          const double denom =
              1.0 + share * p * (relay ? jam_draw[s] : g_e_draw[s]);
          acc += std::log2(1.0 + r * config.rho2 * p * g_e_draw[s] / denom);
        }
        curve.values[static_cast<std::size_t>(i)] =
            acc / static_cast<double>(inner_samples);
      }

      if (run_trial(config, curve, stream, nullptr)) ++out.outages;
    }
  });
  return reduce_blocks(outcomes, trials, seed, nullptr);
}

}  // namespace secsim
