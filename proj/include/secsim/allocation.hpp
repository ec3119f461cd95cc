// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "secsim/config.hpp"
#include "secsim/secrecy_model.hpp"
#include "secsim/wiretap_expectation.hpp"

namespace secsim {

enum class Boundary { interior, at_zero, at_one };

struct AllocationResult {
  AllocationRatio ratio;
  double objective = 0.0;  // log2(1 + ratio P g_b) - curve(ratio), bits
  Boundary boundary = Boundary::interior;
};

/// Maximizes f(r) = log2(1 + r P g_b) - curve(r) over [0, 1].
///
/// f is a difference of concave functions and need not be unimodal, so all
/// grid nodes are scanned first; the two segments adjacent to the best node
/// (on which f is exactly concave, the curve being piecewise linear) are
/// then refined by golden-section search to ratio tolerance 1e-4. Ties
/// break toward the smaller ratio.
///
/// Throws std::invalid_argument if the curve was built for a different
/// config (digest check) or g_b < 0.
AllocationResult optimize_ratio(double g_b, const ExpectedWiretapCurve& curve,
                                const SystemConfig& config);

}  // namespace secsim
