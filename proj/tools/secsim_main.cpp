// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// secsim command line: outage-probability sweeps, expectation-curve dumps
// and the built-in validation suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "secsim/experiments.hpp"
#include "secsim/validation.hpp"
#include "secsim/wiretap_expectation.hpp"

namespace {

unsigned workers_from_env() {
  if (const char* env = std::getenv("SECSIM_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // hardware concurrency
}

secsim::SweepSpec resolve_spec(const std::string& preset, const std::string& config) {
  if (!preset.empty()) return secsim::preset_spec(preset);
  if (!config.empty()) return secsim::load_sweep_spec(config);
  throw std::invalid_argument("a --preset or --config is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secrecy outage simulator for correlated MISO wiretap channels"};
  app.require_subcommand(1);

  std::string preset, config, out_path, trace_path;
  std::optional<std::uint64_t> trials_override, seed_override;
  unsigned workers = workers_from_env();
  std::size_t trace_rows = 100;

  auto add_spec_options = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset,
                              "built-in scenario (fig2, fig4..fig11)");
    auto* c = cmd->add_option("--config", config, "sweep config file");
    p->excludes(c);
    cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
  };

  std::optional<std::uint64_t> curve_samples_override;
  CLI::App* sweep = app.add_subcommand("sweep", "run an outage sweep, write CSV");
  add_spec_options(sweep);
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--trials", trials_override, "override trial count per row");
  sweep->add_option("--seed", seed_override, "override the sweep seed");
  sweep->add_option("--curve-samples", curve_samples_override,
                    "override Monte Carlo samples per curve grid point");
  sweep->add_option("--trace", trace_path, "write per-trial records here");
  sweep->add_option("--trace-rows", trace_rows, "trials recorded per row");

  CLI::App* curve = app.add_subcommand(
      "curve", "dump the expected wiretap capacity over the allocation grid");
  add_spec_options(curve);
  std::string method = "auto";
  int grid_resolution = 0;
  std::uint64_t mc_samples = 0;
  std::optional<std::uint64_t> curve_seed;
  curve->add_option("--out", out_path, "output CSV path")->required();
  curve->add_option("--method", method, "auto, closed or mc")
      ->check(CLI::IsMember({"auto", "closed", "mc"}));
  curve->add_option("--grid", grid_resolution, "grid resolution override");
  curve->add_option("--mc-samples", mc_samples, "Monte Carlo samples per point");
  curve->add_option("--seed", curve_seed, "Monte Carlo seed");

  CLI::App* validate = app.add_subcommand("validate", "run the invariant suites");
  std::string level = "fast";
  validate->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      secsim::SweepSpec spec = resolve_spec(preset, config);
      if (trials_override) spec.trials = *trials_override;
      if (seed_override) spec.seed = *seed_override;
      if (curve_samples_override) spec.curve_mc_samples = *curve_samples_override;

      std::ofstream trace_file;
      secsim::SweepOptions options;
      options.workers = workers;
      options.progress = &std::cerr;
      if (!trace_path.empty()) {
        trace_file.open(trace_path);
        if (!trace_file)
          throw std::runtime_error("cannot open trace file '" + trace_path + "'");
        trace_file << "axis,value,scheme,M,N,trial,g_b,g_e,jam_gain,ratio,outage\n";
        options.trace = &trace_file;
        options.trace_rows = trace_rows;
      }
      const secsim::SweepResult result = secsim::run_sweep(spec, options);
      secsim::emit_csv(result, out_path);
      std::cerr << "wrote " << result.rows.size() << " rows to " << out_path
                << " (" << result.curve_builds << " curves, "
                << result.wall_time_s << " s)\n";
      return 0;
    }

    if (curve->parsed()) {
      secsim::SweepSpec spec = resolve_spec(preset, config);
      // the curve is a property of the base scenario; the sweep axis is not used
      secsim::SystemConfig cfg = spec.base;
      cfg.scheme = spec.schemes.front();
      cfg.alice_antennas = spec.variants.front().first;
      cfg.relay_antennas = spec.variants.front().second;
      cfg.validate();

      const int grid = grid_resolution > 0 ? grid_resolution : spec.grid_resolution;
      const std::uint64_t samples = mc_samples > 0 ? mc_samples : spec.curve_mc_samples;
      const std::uint64_t seed = curve_seed.value_or(spec.seed);

      secsim::ExpectedWiretapCurve result;
      if (method == "mc")
        result = secsim::build_curve_monte_carlo(cfg, grid, samples, seed, workers);
      else if (method == "closed" && cfg.scheme == secsim::Scheme::relay_jamming)
        throw std::invalid_argument("the relay scheme has no closed form");
      else
        result = secsim::build_curve(cfg, grid, samples, seed, workers);

      std::ofstream os(out_path);
      if (!os) throw std::runtime_error("cannot open '" + out_path + "'");
      secsim::write_curve(result, cfg, os);
      std::cerr << "wrote " << result.grid.size() << " grid points to " << out_path
                << "\n";
      return 0;
    }

    if (validate->parsed()) {
      const auto lvl = level == "full" ? secsim::ValidationLevel::full
                                       : secsim::ValidationLevel::fast;
      const secsim::ValidationReport report = secsim::run_validation(lvl, &std::cout);
      std::size_t failed = 0;
      for (const auto& check : report.checks) failed += check.passed ? 0 : 1;
      std::cout << (report.all_passed() ? "all checks passed"
                                        : std::to_string(failed) + " check(s) FAILED")
                << " (" << report.checks.size() << " run)\n";
      return report.all_passed() ? 0 : 2;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
