// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#include "secsim/channel_model.hpp"

#include <cmath>
#include <stdexcept>

namespace secsim {

double norm2(const cvec& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

std::complex<double> hdot(const cvec& a, const cvec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hdot: size mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

namespace {

cvec draw_iid(int n, double variance, RandomStream& rng) {
  cvec v(static_cast<std::size_t>(n));
  for (auto& z : v) z = rng.complex_normal(variance);
  return v;
}

}  // namespace

ChannelRealization sample_main_pair(const SystemConfig& config, RandomStream& rng) {
  config.validate();
  const int m = config.alice_antennas;

  ChannelRealization out;
  out.h_ab = draw_iid(m, config.sigma2_ab, rng);
  out.g_b = norm2(out.h_ab);
  out.g_e = rng.gamma_int(m, config.sigma2_ae);  // |h_ae|^2, independent of h_ab

  const double rho = std::sqrt(config.rho2);
  const double scale_ab = 1.0 / std::sqrt(out.g_b);
  out.h_ae.resize(m);
  if (config.rho2 == 1.0) {
    const double c = std::sqrt(out.g_e) * scale_ab;
    for (int i = 0; i < m; ++i) out.h_ae[i] = c * out.h_ab[i];
  } else {
    if (m < 2)
      throw std::invalid_argument("sample_main_pair: rho2 < 1 requires M >= 2");
    // isotropic unit vector in the orthogonal complement of h_ab
    cvec perp = draw_iid(m, 1.0, rng);
    const std::complex<double> along = hdot(out.h_ab, perp) / out.g_b;
    for (int i = 0; i < m; ++i) perp[i] -= along * out.h_ab[i];
    const double perp_scale = 1.0 / std::sqrt(norm2(perp));
    const double ae_mag = std::sqrt(out.g_e);
    const double c_par = ae_mag * rho * scale_ab;
    const double c_perp = ae_mag * std::sqrt(1.0 - config.rho2) * perp_scale;
    for (int i = 0; i < m; ++i)
      out.h_ae[i] = c_par * out.h_ab[i] + c_perp * perp[i];
  }
  out.rho2_realized = std::norm(hdot(out.h_ab, out.h_ae)) / (out.g_b * out.g_e);
  return out;
}

double projected_jam_gain(const cvec& h_rb, const cvec& h_re) {
  const double g_rb = norm2(h_rb);
  const double g_re = norm2(h_re);
  if (!(g_rb > 0.0)) throw std::invalid_argument("projected_jam_gain: |h_rb| = 0");
  const double rho_r2 = std::norm(hdot(h_re, h_rb)) / (g_re * g_rb);
  return std::max(0.0, (1.0 - rho_r2) * g_re);
}

RelayChannels sample_relay_channels(const SystemConfig& config, RandomStream& rng) {
  if (config.relay_antennas < 2)
    throw std::invalid_argument("sample_relay_channels requires N >= 2");
  RelayChannels out;
  out.h_rb = draw_iid(config.relay_antennas, config.sigma2_rb, rng);
  out.h_re = draw_iid(config.relay_antennas, config.sigma2_re, rng);
  const double g_rb = norm2(out.h_rb);
  const double g_re = norm2(out.h_re);
  out.rho_r2 = std::norm(hdot(out.h_re, out.h_rb)) / (g_re * g_rb);
  out.jam_gain = std::max(0.0, (1.0 - out.rho_r2) * g_re);
  return out;
}

double sample_jam_gain(const SystemConfig& config, RandomStream& rng) {
  if (config.relay_antennas < 2)
    throw std::invalid_argument("sample_jam_gain requires N >= 2");
  return rng.gamma_int(config.relay_antennas - 1, config.sigma2_re);
}

ChannelRealization sample_realization(const SystemConfig& config, RandomStream& rng) {
  ChannelRealization out = sample_main_pair(config, rng);
  if (config.scheme == Scheme::relay_jamming) {
    RelayChannels relay = sample_relay_channels(config, rng);
    out.h_rb = std::move(relay.h_rb);
    out.h_re = std::move(relay.h_re);
    out.jam_gain = relay.jam_gain;
  }
  return out;
}

std::vector<cvec> null_space_basis(const cvec& h) {
  const std::size_t k = h.size();
  if (k < 2) throw std::invalid_argument("null_space_basis requires length >= 2");
  const double h_norm = std::sqrt(norm2(h));
  if (!(h_norm > 0.0))
    throw std::invalid_argument("null_space_basis: zero vector has no direction");

  // Householder reflector mapping h onto e_0: columns 1..K-1 of the
  // reflector are an orthonormal basis of the orthogonal complement of h.
  const std::complex<double> sign =
      (std::abs(h[0]) > 0.0) ? h[0] / std::abs(h[0]) : std::complex<double>(1.0);
  cvec v = h;
  v[0] += sign * h_norm;
  const double v_norm2 = norm2(v);

  std::vector<cvec> basis(k - 1, cvec(k, 0.0));
  for (std::size_t j = 1; j < k; ++j) {
    cvec& col = basis[j - 1];
    const std::complex<double> coef = 2.0 * std::conj(v[j]) / v_norm2;
    for (std::size_t i = 0; i < k; ++i) col[i] = -coef * v[i];
    col[j] += 1.0;
  }
  return basis;
}

AnVector make_an_vector(const std::vector<cvec>& basis, AnVector::Owner owner,
                        RandomStream& rng) {
  if (basis.empty()) throw std::invalid_argument("make_an_vector: empty basis");
  const std::size_t k = basis.front().size();
  AnVector out;
  out.owner = owner;
  out.a.assign(k, 0.0);
  for (const cvec& col : basis) {
    const std::complex<double> w = rng.complex_normal(1.0);
    for (std::size_t i = 0; i < k; ++i) out.a[i] += w * col[i];
  }
  return out;
}

}  // namespace secsim
