// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace secsim {

#define SECSIM_VERSION "0.1.0"

enum class Scheme {
  traditional_alice_an,  // beamforming + artificial noise at Alice
  relay_jamming,         // beamforming at Alice, AN from a cooperative relay
};

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// All scenario parameters. Powers and variances are linear; receiver noise
/// power is normalized to 1, so transmit power in dB is 10*log10(power).
struct SystemConfig {
  int alice_antennas = 4;    // M
  int relay_antennas = 2;    // N, used by the relay scheme only
  double power = 2.0;        // total transmit power P
  double rho2 = 0.9;         // squared main/wiretap correlation coefficient
  double sigma2_ab = 0.5;    // per-entry variance of the Alice-Bob link
  double sigma2_ae = 0.5;    // per-entry variance of the Alice-Eve link
  double sigma2_rb = 0.5;    // per-entry variance of the Relay-Bob link
  double sigma2_re = 0.5;    // per-entry variance of the Relay-Eve link
  double target_rate = 0.0;  // Rs, bits/s/Hz
  Scheme scheme = Scheme::traditional_alice_an;

  /// Throws std::invalid_argument on any violated constraint. The
  /// traditional scheme needs M >= 2 (nonempty null space for the AN);
  /// the relay scheme needs N >= 2 for the same reason at the relay.
  void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double value);

}  // namespace secsim
