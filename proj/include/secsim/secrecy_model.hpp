// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "secsim/config.hpp"

namespace secsim {

/// Fraction of the total power carried by the information-bearing signal
/// (phi in the traditional scheme, lambda in the relay scheme).
struct AllocationRatio {
  double value;
  explicit AllocationRatio(double v);  // requires 0 <= v <= 1
};

struct LinkSnrs {
  double bob = 0.0;
  double eve = 0.0;
};

/// SNR_B = phi P g_b
/// SNR_E = phi rho^2 P g_e / (1 + (1-phi)/(M-1) (1-rho^2) P g_e)
LinkSnrs snr_traditional(AllocationRatio phi, const SystemConfig& config,
                         double g_b, double g_e);

/// SNR_B = lambda P g_b
/// SNR_E = lambda rho^2 P g_e / (1 + (1-lambda)/(N-1) P j_r)
LinkSnrs snr_relay(AllocationRatio lambda, const SystemConfig& config,
                   double g_b, double g_e, double jam_gain);

/// Dispatch on config.scheme; jam_gain is ignored by the traditional scheme.
LinkSnrs link_snrs(AllocationRatio ratio, const SystemConfig& config,
                   double g_b, double g_e, double jam_gain);

struct Capacities {
  double main = 0.0;     // C_m = log2(1 + SNR_B)
  double wiretap = 0.0;  // C_w = log2(1 + SNR_E)
};

Capacities capacities(const LinkSnrs& snrs);

/// C_s = max(C_m - C_w, 0)
double secrecy_capacity(double c_main, double c_wiretap);

/// True iff SNR_B - 2^Rs SNR_E - 2^Rs + 1 <= 0, i.e. C_m - C_w <= Rs.
/// The comparison is non-strict so that the zero-margin point (allocation
/// ratio 0 at Rs = 0) counts as an outage; the reported outage levels at
/// full collinearity depend on this convention.
bool outage_indicator(const LinkSnrs& snrs, double target_rate);

}  // namespace secsim
