// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "secsim/experiments.hpp"
#include "secsim/special_math.hpp"
#include "secsim/validation.hpp"

using namespace secsim;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.axis = SweepAxis::rho2;
  spec.points = {0.0, 0.5, 1.0};
  spec.base.power = db_to_linear(3.0);
  spec.schemes = {Scheme::traditional_alice_an, Scheme::relay_jamming};
  spec.variants = {{2, 2}, {4, 2}};
  spec.trials = 1000;
  spec.seed = 77;
  spec.curve_mc_samples = 10000;
  spec.name = "unit";
  return spec;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::vector<std::string> lines_without_wall_time(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line))
    if (line.rfind("# wall_time_s=", 0) != 0) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("axis and scheme names round-trip") {
  for (SweepAxis axis :
       {SweepAxis::rho2, SweepAxis::power_db, SweepAxis::target_rate})
    CHECK(axis_from_string(to_string(axis)) == axis);
  CHECK_THROWS_AS(axis_from_string("bogus"), std::invalid_argument);
  for (Scheme s : {Scheme::traditional_alice_an, Scheme::relay_jamming})
    CHECK(scheme_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(scheme_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("sweep config parsing with explicit units") {
  std::istringstream is(
      "# comment\n"
      "axis = power_db\n"
      "points = 0, 5, 10\n"
      "schemes = relay\n"
      "variants = 8:4, 8:8\n"
      "trials = 5000\n"
      "seed = 9\n"
      "power_db = 3\n"
      "rho2 = 0.8\n"
      "target_rate_bits = 0.25\n"
      "sigma2_ab = 0.5\n"
      "sigma2_ae = 0.5\n"
      "sigma2_rb = 1.0\n"
      "sigma2_re = 1.0\n"
      "grid_resolution = 51\n"
      "curve_mc_samples = 20000\n");
  const SweepSpec spec = parse_sweep_spec(is, "test");
  CHECK(spec.axis == SweepAxis::power_db);
  CHECK(spec.points == std::vector<double>{0.0, 5.0, 10.0});
  CHECK(spec.schemes == std::vector<Scheme>{Scheme::relay_jamming});
  REQUIRE(spec.variants.size() == 2);
  CHECK(spec.variants[0] == std::pair<int, int>{8, 4});
  // dB converted to linear exactly once, at parse time
  CHECK(spec.base.power == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-15));
  CHECK(spec.base.rho2 == 0.8);
  CHECK(spec.base.target_rate == 0.25);
  CHECK(spec.base.sigma2_rb == 1.0);
  CHECK(spec.trials == 5000);
  CHECK(spec.grid_resolution == 51);
}

TEST_CASE("config parse errors carry context") {
  std::istringstream bad_key("axis = rho2\npoints = 0,1\nbogus_key = 3\n");
  CHECK_THROWS_WITH_AS(parse_sweep_spec(bad_key), doctest::Contains("bogus_key"),
                       std::invalid_argument);
  std::istringstream bad_variant("axis = rho2\npoints = 0,1\nvariants = 4x2\n");
  CHECK_THROWS_AS(parse_sweep_spec(bad_variant), std::invalid_argument);
  std::istringstream no_points("axis = rho2\n");
  CHECK_THROWS_AS(parse_sweep_spec(no_points), std::invalid_argument);
  std::istringstream unsorted("axis = rho2\npoints = 1, 0.5\n");
  CHECK_THROWS_AS(parse_sweep_spec(unsorted), std::invalid_argument);
}

TEST_CASE("row_config applies the axis override") {
  SweepSpec spec = small_spec();
  spec.axis = SweepAxis::rho2;
  CHECK(row_config(spec, 0.3, Scheme::relay_jamming, 4, 8).rho2 == 0.3);
  CHECK(row_config(spec, 0.3, Scheme::relay_jamming, 4, 8).relay_antennas == 8);
  spec.axis = SweepAxis::power_db;
  CHECK(row_config(spec, 10.0, Scheme::traditional_alice_an, 4, 2).power ==
        doctest::Approx(10.0).epsilon(1e-15));
  spec.axis = SweepAxis::target_rate;
  CHECK(row_config(spec, 0.7, Scheme::traditional_alice_an, 4, 2).target_rate == 0.7);
}

TEST_CASE("run_sweep emits rows in deterministic order") {
  const SweepSpec spec = small_spec();
  const SweepResult result = run_sweep(spec);
  REQUIRE(result.rows.size() == 3 * 2 * 2);
  std::size_t i = 0;
  for (double value : spec.points) {
    for (Scheme scheme : spec.schemes) {
      for (const auto& [m, n] : spec.variants) {
        CHECK(result.rows[i].value == value);
        CHECK(result.rows[i].scheme == scheme);
        CHECK(result.rows[i].alice_antennas == m);
        CHECK(result.rows[i].relay_antennas == n);
        CHECK(result.rows[i].estimate.trials == spec.trials);
        ++i;
      }
    }
  }
  // distinct rows use distinct derived seeds
  CHECK(result.rows[0].estimate.seed != result.rows[1].estimate.seed);
}

TEST_CASE("sweeps are reproducible and worker-count invariant") {
  const SweepSpec spec = small_spec();
  SweepOptions one;
  one.workers = 1;
  SweepOptions four;
  four.workers = 4;
  const std::string a = csv_string(run_sweep(spec, one));
  const std::string b = csv_string(run_sweep(spec, four));
  CHECK(data_lines(a) == data_lines(b));
  CHECK(lines_without_wall_time(a) == lines_without_wall_time(b));
}

TEST_CASE("target-rate sweeps reuse curves across points") {
  SweepSpec spec = small_spec();
  spec.axis = SweepAxis::target_rate;
  spec.points = {0.0, 0.5};
  const SweepResult two_points = run_sweep(spec);
  spec.points = {0.0, 0.25, 0.5, 0.75, 1.0};
  const SweepResult five_points = run_sweep(spec);
  // one curve per (scheme, variant); M=2 and M=4 differ, N fixed
  CHECK(two_points.curve_builds == 4);
  CHECK(five_points.curve_builds == two_points.curve_builds);
  CHECK(five_points.rows.size() == 5 * 2 * 2);
}

TEST_CASE("rho2 sweeps build one curve per row config") {
  const SweepSpec spec = small_spec();
  const SweepResult result = run_sweep(spec);
  CHECK(result.curve_builds == static_cast<int>(result.rows.size()));
}

TEST_CASE("CSV: empty result is metadata and header only") {
  SweepResult empty;
  empty.spec = small_spec();
  const std::string csv = csv_string(empty);
  CHECK(data_lines(csv).size() == 1);  // header only
  CHECK(data_lines(csv)[0] == "axis,value,scheme,M,N,p_out,ci95,trials,seed");
}

TEST_CASE("CSV round-trips exactly") {
  const SweepSpec spec = small_spec();
  SweepResult result = run_sweep(spec);
  const std::string emitted = csv_string(result);

  std::istringstream is(emitted);
  const std::vector<SweepRow> parsed = parse_csv(is);
  REQUIRE(parsed.size() == result.rows.size());
  SweepResult reparsed = result;
  reparsed.rows = parsed;
  CHECK(csv_string(reparsed) == emitted);

  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].scheme == result.rows[i].scheme);
    CHECK(parsed[i].alice_antennas == result.rows[i].alice_antennas);
    CHECK(parsed[i].estimate.trials == result.rows[i].estimate.trials);
    CHECK(parsed[i].estimate.seed == result.rows[i].estimate.seed);
  }
}

TEST_CASE("CSV parser rejects malformed input") {
  std::istringstream missing_header("rho2,0,traditional,2,2,0,0,1000,1\n");
  CHECK_THROWS_AS(parse_csv(missing_header), std::invalid_argument);
  std::istringstream short_row(
      "axis,value,scheme,M,N,p_out,ci95,trials,seed\nrho2,0,traditional,2,2\n");
  CHECK_THROWS_AS(parse_csv(short_row), std::invalid_argument);
}

TEST_CASE("fig presets encode the reference scenarios") {
  for (const std::string& name : preset_names()) CHECK_NOTHROW(preset_spec(name));
  CHECK_THROWS_WITH_AS(preset_spec("fig99"), doctest::Contains("fig4"),
                       std::invalid_argument);

  const SweepSpec fig4 = preset_spec("fig4");
  CHECK(fig4.axis == SweepAxis::rho2);
  CHECK(fig4.points.size() == 11);
  CHECK(fig4.points.front() == 0.0);
  CHECK(fig4.points.back() == 1.0);
  CHECK(fig4.variants ==
        std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {8, 2}});
  CHECK(fig4.schemes.size() == 2);
  CHECK(fig4.base.power == doctest::Approx(db_to_linear(3.0)).epsilon(1e-15));
  CHECK(fig4.base.sigma2_ab == 0.5);
  CHECK(fig4.trials == 100000);
  CHECK(fig4.points.size() * fig4.schemes.size() * fig4.variants.size() == 66);

  CHECK(preset_spec("fig5").base.sigma2_re == 1.0);
  CHECK(preset_spec("fig6").variants ==
        std::vector<std::pair<int, int>>{{8, 2}, {8, 4}, {8, 8}});
  CHECK(preset_spec("fig7").axis == SweepAxis::power_db);
  CHECK(preset_spec("fig8").base.rho2 == 1.0);
  CHECK(preset_spec("fig10").axis == SweepAxis::target_rate);
  CHECK(preset_spec("fig2").schemes ==
        std::vector<Scheme>{Scheme::traditional_alice_an});
}

TEST_CASE("relay variance increase does not hurt (fig5 vs fig4 ordering)") {
  SweepSpec base = small_spec();
  base.axis = SweepAxis::rho2;
  base.points = {0.9, 1.0};
  base.schemes = {Scheme::relay_jamming};
  base.variants = {{4, 2}};
  base.trials = 20000;
  SweepSpec closer = base;
  closer.base.sigma2_rb = 1.0;
  closer.base.sigma2_re = 1.0;
  const SweepResult far_rows = run_sweep(base);
  const SweepResult near_rows = run_sweep(closer);
  for (std::size_t i = 0; i < far_rows.rows.size(); ++i) {
    const auto& far = far_rows.rows[i].estimate;
    const auto& near = near_rows.rows[i].estimate;
    CHECK(near.p_out <=
          far.p_out + 2.0 * std::hypot(far.ci95_half_width, near.ci95_half_width));
  }
}

TEST_CASE("fast validation passes on a healthy build") {
  const ValidationReport report = run_validation(ValidationLevel::fast);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  CHECK(report.all_passed());
}

TEST_CASE("the oracle comparison catches a broken closed form") {
  const ValidationCheck broken = check_closed_form_vs_oracle(
      [](double alpha, int shape) { return 1.01 * gamma_log_integral(alpha, shape); });
  CHECK_FALSE(broken.passed);
  const ValidationCheck healthy = check_closed_form_vs_oracle(
      [](double alpha, int shape) { return gamma_log_integral(alpha, shape); });
  CHECK(healthy.passed);
}

TEST_SUITE_END();
