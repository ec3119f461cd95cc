// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/wiretap_expectation.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "detail/parallel_for.hpp"
#include "secsim/special_math.hpp"

namespace secsim {

namespace {

using detail::parallel_for;

void fnv_mix(std::uint64_t& h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xffULL;
    h *= 0x100000001b3ULL;
  }
}

double traditional_alpha_signal(double phi, const SystemConfig& c) {
  const double an_share = (1.0 - phi) / (c.alice_antennas - 1);
  return (an_share * (1.0 - c.rho2) + phi * c.rho2) * c.sigma2_ae * c.power;
}

double traditional_alpha_noise(double phi, const SystemConfig& c) {
  const double an_share = (1.0 - phi) / (c.alice_antennas - 1);
  return an_share * (1.0 - c.rho2) * c.sigma2_ae * c.power;
}

McEstimate mc_mean(std::uint64_t samples, const std::function<double()>& draw) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double v = draw();
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

void check_mc_inputs(const SystemConfig& config, std::uint64_t samples) {
  config.validate();
  if (samples < 10000)
    throw std::invalid_argument("expectation Monte Carlo needs >= 1e4 samples");
}

}  // namespace

double ExpectedWiretapCurve::value_at(double ratio) const {
  if (grid.size() < 2 || grid.size() != values.size())
    throw std::logic_error("curve is not initialized");
  const double lo = grid.front();
  const double hi = grid.back();
  const double r = std::min(std::max(ratio, lo), hi);
  const double step = (hi - lo) / static_cast<double>(grid.size() - 1);
  auto idx = static_cast<std::size_t>((r - lo) / step);
  if (idx >= grid.size() - 1) idx = grid.size() - 2;
  const double t = (r - grid[idx]) / (grid[idx + 1] - grid[idx]);
  return values[idx] + t * (values[idx + 1] - values[idx]);
}

std::uint64_t curve_config_digest(const SystemConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  fnv_mix(h, config.scheme == Scheme::relay_jamming ? 2 : 1);
  fnv_mix(h, static_cast<std::uint64_t>(config.alice_antennas));
  fnv_mix(h, std::bit_cast<std::uint64_t>(config.power));
  fnv_mix(h, std::bit_cast<std::uint64_t>(config.rho2));
  fnv_mix(h, std::bit_cast<std::uint64_t>(config.sigma2_ae));
  if (config.scheme == Scheme::relay_jamming) {
    fnv_mix(h, static_cast<std::uint64_t>(config.relay_antennas));
    fnv_mix(h, std::bit_cast<std::uint64_t>(config.sigma2_re));
  }
  return h;
}

double expected_cw_traditional(AllocationRatio phi, const SystemConfig& config) {
  if (config.alice_antennas < 2)
    throw std::invalid_argument("expected_cw_traditional requires M >= 2");
  const double a_signal = traditional_alpha_signal(phi.value, config);
  const double a_noise = traditional_alpha_noise(phi.value, config);
  const double cw1 =
      a_signal > 0.0 ? gamma_log_integral(a_signal, config.alice_antennas) : 0.0;
  const double cw2 =
      a_noise > 0.0 ? gamma_log_integral(a_noise, config.alice_antennas) : 0.0;
  return std::max(0.0, cw1 - cw2);
}

McEstimate expected_cw_traditional_mc(AllocationRatio phi, const SystemConfig& config,
                                      std::uint64_t samples, RandomStream& rng) {
  check_mc_inputs(config, samples);
  if (config.alice_antennas < 2)
    throw std::invalid_argument("expected_cw_traditional_mc requires M >= 2");
  const double p = config.power;
  const double an_share = (1.0 - phi.value) / (config.alice_antennas - 1);
  return mc_mean(samples, [&]() {
    const double g_e = rng.gamma_int(config.alice_antennas, config.sigma2_ae);
    const double snr_e = phi.value * config.rho2 * p * g_e /
                         (1.0 + an_share * (1.0 - config.rho2) * p * g_e);
    return std::log2(1.0 + snr_e);
  });
}

McEstimate expected_cw_relay(AllocationRatio lambda, const SystemConfig& config,
                             std::uint64_t samples, RandomStream& rng) {
  check_mc_inputs(config, samples);
  if (config.relay_antennas < 2)
    throw std::invalid_argument("expected_cw_relay requires N >= 2");
  const double p = config.power;
  const double jam_share = (1.0 - lambda.value) / (config.relay_antennas - 1);
  return mc_mean(samples, [&]() {
    const double g_e = rng.gamma_int(config.alice_antennas, config.sigma2_ae);
    const double jam = rng.gamma_int(config.relay_antennas - 1, config.sigma2_re);
    const double snr_e =
        lambda.value * config.rho2 * p * g_e / (1.0 + jam_share * p * jam);
    return std::log2(1.0 + snr_e);
  });
}

namespace {

ExpectedWiretapCurve make_grid_curve(const SystemConfig& config, int grid_resolution) {
  if (grid_resolution < 11)
    throw std::invalid_argument("curve grid resolution must be >= 11");
  ExpectedWiretapCurve curve;
  curve.config_digest = curve_config_digest(config);
  curve.grid.resize(static_cast<std::size_t>(grid_resolution));
  for (int i = 0; i < grid_resolution; ++i)
    curve.grid[static_cast<std::size_t>(i)] =
        static_cast<double>(i) / (grid_resolution - 1);
  curve.values.assign(curve.grid.size(), 0.0);
  curve.std_errors.assign(curve.grid.size(), 0.0);
  return curve;
}

void fill_monte_carlo(ExpectedWiretapCurve& curve, const SystemConfig& config,
                      std::uint64_t mc_samples, std::uint64_t seed,
                      unsigned workers) {
  curve.method = CurveMethod::monte_carlo;
  curve.mc_samples = mc_samples;
  const RandomStream root(seed);
  const bool relay = config.scheme == Scheme::relay_jamming;
  parallel_for(curve.grid.size(), workers, [&](std::size_t i) {
    RandomStream point_stream = root.fork(i);
    const AllocationRatio r(curve.grid[i]);
    const McEstimate est =
        relay ? expected_cw_relay(r, config, mc_samples, point_stream)
              : expected_cw_traditional_mc(r, config, mc_samples, point_stream);
    curve.values[i] = est.value;
    curve.std_errors[i] = est.std_error;
  });
}

}  // namespace

ExpectedWiretapCurve build_curve(const SystemConfig& config, int grid_resolution,
                                 std::uint64_t mc_samples, std::uint64_t seed,
                                 unsigned workers) {
  config.validate();
  ExpectedWiretapCurve curve = make_grid_curve(config, grid_resolution);
  if (config.scheme == Scheme::traditional_alice_an) {
    curve.method = CurveMethod::closed_form;
    curve.mc_samples = 0;
    for (std::size_t i = 0; i < curve.grid.size(); ++i)
      curve.values[i] =
          expected_cw_traditional(AllocationRatio(curve.grid[i]), config);
  } else {
    fill_monte_carlo(curve, config, mc_samples, seed, workers);
  }
  return curve;
}

ExpectedWiretapCurve build_curve_monte_carlo(const SystemConfig& config,
                                             int grid_resolution,
                                             std::uint64_t mc_samples,
                                             std::uint64_t seed, unsigned workers) {
  config.validate();
  ExpectedWiretapCurve curve = make_grid_curve(config, grid_resolution);
  fill_monte_carlo(curve, config, mc_samples, seed, workers);
  return curve;
}

void write_curve(const ExpectedWiretapCurve& curve, const SystemConfig& config,
                 std::ostream& os) {
  char buf[128];
  os << "# secsim " << SECSIM_VERSION << " curve\n";
  std::snprintf(buf, sizeof buf,
                "# scheme=%s M=%d N=%d power_db=%.6g rho2=%.6g sigma2_ae=%.6g "
                "sigma2_re=%.6g\n",
                to_string(config.scheme).c_str(), config.alice_antennas,
                config.relay_antennas, linear_to_db(config.power), config.rho2,
                config.sigma2_ae, config.sigma2_re);
  os << buf;
  os << "# method="
     << (curve.method == CurveMethod::closed_form ? "closed_form" : "monte_carlo")
     << " mc_samples=" << curve.mc_samples
     << " grid_resolution=" << curve.grid.size() << "\n";
  os << "ratio,expected_cw,std_error\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", curve.grid[i],
                  curve.values[i], curve.std_errors[i]);
    os << buf;
  }
}

}  // namespace secsim
