// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/config.hpp"

#include <cmath>
#include <stdexcept>

namespace secsim {

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::traditional_alice_an:
      return "traditional";
    case Scheme::relay_jamming:
      return "relay";
  }
  throw std::logic_error("unknown scheme");
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "traditional") return Scheme::traditional_alice_an;
  if (name == "relay") return Scheme::relay_jamming;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected 'traditional' or 'relay')");
}

void SystemConfig::validate() const {
  if (alice_antennas < 1)
    throw std::invalid_argument("alice_antennas must be >= 1");
  if (scheme == Scheme::traditional_alice_an && alice_antennas < 2)
    throw std::invalid_argument(
        "the traditional scheme needs alice_antennas >= 2 so the AN null space is nonempty");
  if (scheme == Scheme::relay_jamming && relay_antennas < 2)
    throw std::invalid_argument(
        "the relay scheme needs relay_antennas >= 2 so the AN null space is nonempty");
  if (!(power > 0.0) || !std::isfinite(power))
    throw std::invalid_argument("power must be positive and finite");
  if (!(rho2 >= 0.0 && rho2 <= 1.0))
    throw std::invalid_argument("rho2 must lie in [0, 1]");
  for (double s : {sigma2_ab, sigma2_ae, sigma2_rb, sigma2_re}) {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("channel variances must be positive and finite");
  }
  if (!(target_rate >= 0.0) || !std::isfinite(target_rate))
    throw std::invalid_argument("target_rate must be nonnegative and finite");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double value) { return 10.0 * std::log10(value); }

}  // namespace secsim
