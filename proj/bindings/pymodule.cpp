// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "secsim/allocation.hpp"
#include "secsim/channel_model.hpp"
#include "secsim/experiments.hpp"
#include "secsim/montecarlo.hpp"
#include "secsim/secrecy_model.hpp"
#include "secsim/special_math.hpp"
#include "secsim/validation.hpp"
#include "secsim/wiretap_expectation.hpp"

namespace py = pybind11;
using namespace secsim;

namespace {

OutageEstimate py_estimate_outage(const SystemConfig& config,
                                  const ExpectedWiretapCurve& curve,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers) {
  OutageOptions options;
  options.workers = workers;
  return estimate_outage(config, curve, trials, seed, options);
}

OutageEstimate py_slow_oracle(const SystemConfig& config, std::uint64_t trials,
                              std::uint64_t inner_samples, std::uint64_t seed,
                              unsigned workers) {
  OutageOptions options;
  options.workers = workers;
  return estimate_outage_slow_oracle(config, trials, inner_samples, seed, options);
}

SweepResult py_run_sweep(const SweepSpec& spec, unsigned workers) {
  SweepOptions options;
  options.workers = workers;
  return run_sweep(spec, options);
}

std::string py_curve_csv(const ExpectedWiretapCurve& curve,
                         const SystemConfig& config) {
  std::ostringstream os;
  write_curve(curve, config, os);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Secrecy outage simulation for correlated MISO wiretap channels with "
      "artificial noise and a cooperative jamming relay";

  py::enum_<Scheme>(m, "Scheme")
      .value("traditional", Scheme::traditional_alice_an)
      .value("relay", Scheme::relay_jamming);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_readwrite("alice_antennas", &SystemConfig::alice_antennas)
      .def_readwrite("relay_antennas", &SystemConfig::relay_antennas)
      .def_readwrite("power", &SystemConfig::power)
      .def_readwrite("rho2", &SystemConfig::rho2)
      .def_readwrite("sigma2_ab", &SystemConfig::sigma2_ab)
      .def_readwrite("sigma2_ae", &SystemConfig::sigma2_ae)
      .def_readwrite("sigma2_rb", &SystemConfig::sigma2_rb)
      .def_readwrite("sigma2_re", &SystemConfig::sigma2_re)
      .def_readwrite("target_rate", &SystemConfig::target_rate)
      .def_readwrite("scheme", &SystemConfig::scheme)
      .def("validate", &SystemConfig::validate);

  m.def("db_to_linear", &db_to_linear, py::arg("db"));
  m.def("linear_to_db", &linear_to_db, py::arg("value"));

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("fork", &RandomStream::fork, py::arg("index"))
      .def("uniform", &RandomStream::uniform)
      .def("normal", &RandomStream::normal)
      .def("exponential", &RandomStream::exponential, py::arg("mean"))
      .def("gamma_int", &RandomStream::gamma_int, py::arg("shape"), py::arg("scale"));

  m.def("exp_int", py::overload_cast<int, double>(&exp_int), py::arg("n"),
        py::arg("x"));
  m.def("exp_int_scaled", &exp_int_scaled, py::arg("n"), py::arg("x"));
  m.def("gamma_log_integral", &gamma_log_integral, py::arg("alpha"),
        py::arg("shape"));
  m.def("quad_log_gamma_oracle", &quad_log_gamma_oracle, py::arg("alpha"),
        py::arg("shape"), py::arg("rel_tol") = 1e-10);
  m.def(
      "sample_gamma",
      [](int shape, double scale, RandomStream& rng) {
        return sample_gamma(GammaParams(shape, scale), rng);
      },
      py::arg("shape"), py::arg("scale"), py::arg("rng"));

  py::class_<ChannelRealization>(m, "ChannelRealization")
      .def_readonly("h_ab", &ChannelRealization::h_ab)
      .def_readonly("h_ae", &ChannelRealization::h_ae)
      .def_readonly("h_rb", &ChannelRealization::h_rb)
      .def_readonly("h_re", &ChannelRealization::h_re)
      .def_readonly("g_b", &ChannelRealization::g_b)
      .def_readonly("g_e", &ChannelRealization::g_e)
      .def_readonly("rho2_realized", &ChannelRealization::rho2_realized)
      .def_readonly("jam_gain", &ChannelRealization::jam_gain);

  m.def("sample_main_pair", &sample_main_pair, py::arg("config"), py::arg("rng"));
  m.def("sample_realization", &sample_realization, py::arg("config"), py::arg("rng"));
  m.def("sample_jam_gain", &sample_jam_gain, py::arg("config"), py::arg("rng"));
  m.def("null_space_basis", &null_space_basis, py::arg("h"));
  m.def("projected_jam_gain", &projected_jam_gain, py::arg("h_rb"), py::arg("h_re"));

  py::class_<LinkSnrs>(m, "LinkSnrs")
      .def_readonly("bob", &LinkSnrs::bob)
      .def_readonly("eve", &LinkSnrs::eve);

  m.def(
      "snr_traditional",
      [](double phi, const SystemConfig& cfg, double g_b, double g_e) {
        return snr_traditional(AllocationRatio(phi), cfg, g_b, g_e);
      },
      py::arg("phi"), py::arg("config"), py::arg("g_b"), py::arg("g_e"));
  m.def(
      "snr_relay",
      [](double lam, const SystemConfig& cfg, double g_b, double g_e, double jam) {
        return snr_relay(AllocationRatio(lam), cfg, g_b, g_e, jam);
      },
      py::arg("lam"), py::arg("config"), py::arg("g_b"), py::arg("g_e"),
      py::arg("jam_gain"));
  m.def(
      "capacities",
      [](const LinkSnrs& snrs) {
        const Capacities c = capacities(snrs);
        return py::make_tuple(c.main, c.wiretap);
      },
      py::arg("snrs"));
  m.def("secrecy_capacity", &secrecy_capacity, py::arg("c_main"), py::arg("c_wiretap"));
  m.def("outage_indicator", &outage_indicator, py::arg("snrs"), py::arg("target_rate"));

  py::enum_<CurveMethod>(m, "CurveMethod")
      .value("closed_form", CurveMethod::closed_form)
      .value("monte_carlo", CurveMethod::monte_carlo);

  py::class_<ExpectedWiretapCurve>(m, "ExpectedWiretapCurve")
      .def_readonly("grid", &ExpectedWiretapCurve::grid)
      .def_readonly("values", &ExpectedWiretapCurve::values)
      .def_readonly("std_errors", &ExpectedWiretapCurve::std_errors)
      .def_readonly("method", &ExpectedWiretapCurve::method)
      .def_readonly("mc_samples", &ExpectedWiretapCurve::mc_samples)
      .def_readonly("config_digest", &ExpectedWiretapCurve::config_digest)
      .def("value_at", &ExpectedWiretapCurve::value_at, py::arg("ratio"));

  m.def(
      "expected_cw_traditional",
      [](double phi, const SystemConfig& cfg) {
        return expected_cw_traditional(AllocationRatio(phi), cfg);
      },
      py::arg("phi"), py::arg("config"));
  m.def(
      "expected_cw_relay",
      [](double lam, const SystemConfig& cfg, std::uint64_t samples,
         RandomStream& rng) {
        const McEstimate est =
            expected_cw_relay(AllocationRatio(lam), cfg, samples, rng);
        return py::make_tuple(est.value, est.std_error);
      },
      py::arg("lam"), py::arg("config"), py::arg("samples"), py::arg("rng"));
  m.def("build_curve", &build_curve, py::arg("config"), py::arg("grid_resolution"),
        py::arg("mc_samples"), py::arg("seed"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("build_curve_monte_carlo", &build_curve_monte_carlo, py::arg("config"),
        py::arg("grid_resolution"), py::arg("mc_samples"), py::arg("seed"),
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("curve_config_digest", &curve_config_digest, py::arg("config"));
  m.def("curve_csv", &py_curve_csv, py::arg("curve"), py::arg("config"));

  py::enum_<Boundary>(m, "Boundary")
      .value("interior", Boundary::interior)
      .value("at_zero", Boundary::at_zero)
      .value("at_one", Boundary::at_one);

  py::class_<AllocationResult>(m, "AllocationResult")
      .def_property_readonly("ratio",
                             [](const AllocationResult& r) { return r.ratio.value; })
      .def_readonly("objective", &AllocationResult::objective)
      .def_readonly("boundary", &AllocationResult::boundary);

  m.def("optimize_ratio", &optimize_ratio, py::arg("g_b"), py::arg("curve"),
        py::arg("config"));

  py::class_<OutageEstimate>(m, "OutageEstimate")
      .def_readonly("p_out", &OutageEstimate::p_out)
      .def_readonly("trials", &OutageEstimate::trials)
      .def_readonly("ci95_half_width", &OutageEstimate::ci95_half_width)
      .def_readonly("seed", &OutageEstimate::seed)
      .def("wilson_ci95", &OutageEstimate::wilson_ci95);

  m.def("estimate_outage", &py_estimate_outage, py::arg("config"), py::arg("curve"),
        py::arg("trials"), py::arg("seed"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("estimate_outage_slow_oracle", &py_slow_oracle, py::arg("config"),
        py::arg("trials"), py::arg("inner_samples"), py::arg("seed"),
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());

  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("rho2", SweepAxis::rho2)
      .value("power_db", SweepAxis::power_db)
      .value("target_rate", SweepAxis::target_rate);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("axis", &SweepSpec::axis)
      .def_readwrite("points", &SweepSpec::points)
      .def_readwrite("base", &SweepSpec::base)
      .def_readwrite("schemes", &SweepSpec::schemes)
      .def_readwrite("variants", &SweepSpec::variants)
      .def_readwrite("trials", &SweepSpec::trials)
      .def_readwrite("seed", &SweepSpec::seed)
      .def_readwrite("grid_resolution", &SweepSpec::grid_resolution)
      .def_readwrite("curve_mc_samples", &SweepSpec::curve_mc_samples)
      .def_readwrite("name", &SweepSpec::name)
      .def("validate", &SweepSpec::validate);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("axis", &SweepRow::axis)
      .def_readonly("value", &SweepRow::value)
      .def_readonly("scheme", &SweepRow::scheme)
      .def_readonly("alice_antennas", &SweepRow::alice_antennas)
      .def_readonly("relay_antennas", &SweepRow::relay_antennas)
      .def_readonly("estimate", &SweepRow::estimate);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("spec", &SweepResult::spec)
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("curve_builds", &SweepResult::curve_builds)
      .def_readonly("wall_time_s", &SweepResult::wall_time_s);

  m.def("run_sweep", &py_run_sweep, py::arg("spec"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("csv_string", &csv_string, py::arg("result"));
  m.def("preset_spec", &preset_spec, py::arg("name"));
  m.def("preset_names", &preset_names);
  m.def("load_sweep_spec", &load_sweep_spec, py::arg("path"));

  m.def(
      "run_validation",
      [](const std::string& level) {
        ValidationReport report;
        {
          py::gil_scoped_release release;
          report = run_validation(level == "full" ? ValidationLevel::full
                                                  : ValidationLevel::fast);
        }
        py::list out;
        for (const auto& check : report.checks)
          out.append(py::make_tuple(check.name, check.passed, check.detail));
        return out;
      },
      py::arg("level") = "fast");

#ifdef SECSIM_VERSION_INFO
  m.attr("__version__") = SECSIM_VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
