// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace secsim {

enum class ValidationLevel { fast, full };

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // measured values
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Runs the cross-module invariant suite. The fast level covers the
/// deterministic identities and the cheap statistical checks; full adds the
/// closed-form-vs-simulation curve comparison and the nested-Monte-Carlo
/// outage cross-check. Progress lines go to `out` when provided.
ValidationReport run_validation(ValidationLevel level, std::ostream* out = nullptr);

/// Compares a closed-form evaluator of E[log2(1 + alpha X)] against the
/// quadrature oracle over the standard (alpha, shape) grid. Parameterized
/// so tests can verify the check trips on a broken evaluator.
ValidationCheck check_closed_form_vs_oracle(
    const std::function<double(double, int)>& closed_form);

}  // namespace secsim
