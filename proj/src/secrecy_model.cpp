// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/secrecy_model.hpp"

#include <cmath>
#include <stdexcept>

namespace secsim {

AllocationRatio::AllocationRatio(double v) : value(v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("allocation ratio must lie in [0, 1]");
}

LinkSnrs snr_traditional(AllocationRatio phi, const SystemConfig& config,
                         double g_b, double g_e) {
  if (g_b < 0.0 || g_e < 0.0)
    throw std::invalid_argument("channel gains must be nonnegative");
  if (config.alice_antennas < 2 && phi.value < 1.0)
    throw std::invalid_argument(
        "traditional scheme with phi < 1 needs M >= 2 (no null space for AN)");
  const double p = config.power;
  const double an_share =
      config.alice_antennas >= 2
          ? (1.0 - phi.value) / (config.alice_antennas - 1)
          : 0.0;
  LinkSnrs out;
  out.bob = phi.value * p * g_b;
  out.eve = phi.value * config.rho2 * p * g_e /
            (1.0 + an_share * (1.0 - config.rho2) * p * g_e);
  return out;
}

LinkSnrs snr_relay(AllocationRatio lambda, const SystemConfig& config,
                   double g_b, double g_e, double jam_gain) {
  if (config.relay_antennas < 2)
    throw std::invalid_argument("relay scheme requires N >= 2");
  if (g_b < 0.0 || g_e < 0.0 || jam_gain < 0.0)
    throw std::invalid_argument("channel gains must be nonnegative");
  const double p = config.power;
  LinkSnrs out;
  out.bob = lambda.value * p * g_b;
  out.eve = lambda.value * config.rho2 * p * g_e /
            (1.0 + (1.0 - lambda.value) / (config.relay_antennas - 1) * p * jam_gain);
  return out;
}

LinkSnrs link_snrs(AllocationRatio ratio, const SystemConfig& config,
                   double g_b, double g_e, double jam_gain) {
  return config.scheme == Scheme::relay_jamming
             ? snr_relay(ratio, config, g_b, g_e, jam_gain)
             : snr_traditional(ratio, config, g_b, g_e);
}

Capacities capacities(const LinkSnrs& snrs) {
  return {std::log2(1.0 + snrs.bob), std::log2(1.0 + snrs.eve)};
}

double secrecy_capacity(double c_main, double c_wiretap) {
  return std::max(c_main - c_wiretap, 0.0);
}

bool outage_indicator(const LinkSnrs& snrs, double target_rate) {
  if (!(target_rate >= 0.0))
    throw std::invalid_argument("target rate must be nonnegative");
  const double k = std::exp2(target_rate);
  return snrs.bob - k * snrs.eve - k + 1.0 <= 0.0;
}

}  // namespace secsim
