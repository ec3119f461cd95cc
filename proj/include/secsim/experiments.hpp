// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "secsim/config.hpp"
#include "secsim/montecarlo.hpp"

namespace secsim {

enum class SweepAxis { rho2, power_db, target_rate };

std::string to_string(SweepAxis axis);
SweepAxis axis_from_string(const std::string& name);

/// One experiment: a sweep of a single axis across schemes and (M, N)
/// antenna variants. Power axis points are in dB and converted to linear
/// exactly once when the per-row config is formed.
struct SweepSpec {
  SweepAxis axis = SweepAxis::rho2;
  std::vector<double> points;  // nonempty, sorted ascending
  SystemConfig base;
  std::vector<Scheme> schemes;
  std::vector<std::pair<int, int>> variants;  // (M, N)
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int grid_resolution = 101;
  std::uint64_t curve_mc_samples = 100000;
  std::string name;  // preset name or config path, metadata only

  void validate() const;
};

struct SweepRow {
  SweepAxis axis = SweepAxis::rho2;
  double value = 0.0;
  Scheme scheme = Scheme::traditional_alice_an;
  int alice_antennas = 0;
  int relay_antennas = 0;
  OutageEstimate estimate;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  int curve_builds = 0;  // instrumentation: distinct curves built
  double wall_time_s = 0.0;
};

struct SweepOptions {
  unsigned workers = 0;
  std::ostream* progress = nullptr;
  std::size_t trace_rows = 0;      // per sweep row
  std::ostream* trace = nullptr;   // columnar trial records
};

/// Config for one sweep row: base overridden by the axis value, scheme and
/// antenna variant.
SystemConfig row_config(const SweepSpec& spec, double axis_value, Scheme scheme,
                        int alice_antennas, int relay_antennas);

/// Runs rows in deterministic order (points, then schemes, then variants).
/// Curves are cached by config digest, so sweeping the target rate reuses
/// one curve per (scheme, variant) no matter how many points the axis has.
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// CSV with leading # metadata lines and the header
/// axis,value,scheme,M,N,p_out,ci95,trials,seed; floats use 6 significant
/// digits. The wall-time metadata line is the only run-dependent content.
void emit_csv(const SweepResult& result, std::ostream& os);
void emit_csv(const SweepResult& result, const std::string& path);
std::string csv_string(const SweepResult& result);

/// Parses the data rows of an emitted CSV (metadata lines are skipped).
std::vector<SweepRow> parse_csv(std::istream& is);

/// Flat key = value sweep description; see the README for the key list.
SweepSpec parse_sweep_spec(std::istream& is, const std::string& name = "");
SweepSpec load_sweep_spec(const std::string& path);

/// Built-in presets fig2 and fig4..fig11 matching the reference scenarios.
SweepSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace secsim
