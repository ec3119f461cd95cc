// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "secsim/config.hpp"
#include "secsim/rng.hpp"

namespace secsim {

using cvec = std::vector<std::complex<double>>;

double norm2(const cvec& v);                              // |v|^2
std::complex<double> hdot(const cvec& a, const cvec& b);  // a^H b

struct RelayChannels {
  cvec h_rb, h_re;
  double rho_r2 = 0.0;    // |<h_re, h_rb>|^2 / (|h_re|^2 |h_rb|^2)
  double jam_gain = 0.0;  // j_R = (1 - rho_r2) |h_re|^2
};

/// One joint draw of the channel state and its scalar sufficient statistics.
struct ChannelRealization {
  cvec h_ab, h_ae;
  double g_b = 0.0;  // |h_ab|^2
  double g_e = 0.0;  // |h_ae|^2
  double rho2_realized = 0.0;
  cvec h_rb, h_re;        // filled for the relay scheme only
  double jam_gain = 0.0;  // j_R, relay scheme only
};

struct AnVector {
  enum class Owner { alice, relay };
  cvec a;  // ambient coordinates; orthogonal to the owner's legitimate link
  Owner owner = Owner::alice;
};

/// Draws h_ab with i.i.d. CN(0, sigma2_ab) entries and constructs h_ae as
///   h_ae = |h_ae| (rho u_ab + sqrt(1 - rho^2) u_perp),
/// where u_ab = h_ab/|h_ab|, u_perp is an isotropic unit vector orthogonal
/// to h_ab and |h_ae|^2 ~ Gamma(M, sigma2_ae) independently. The realized
/// squared correlation equals config.rho2 exactly (up to rounding) on every
/// draw, and g_b, g_e are independent.
ChannelRealization sample_main_pair(const SystemConfig& config, RandomStream& rng);

/// Squared norm of h_re projected onto the orthogonal complement of h_rb,
/// i.e. (1 - rho_R^2) |h_re|^2.
double projected_jam_gain(const cvec& h_rb, const cvec& h_re);

/// Independent h_rb, h_re with i.i.d. CN entries; jam_gain is the squared
/// norm of h_re projected onto the orthogonal complement of h_rb.
RelayChannels sample_relay_channels(const SystemConfig& config, RandomStream& rng);

/// Fast path for the Monte Carlo loops: j_R ~ Gamma(N-1, sigma2_re),
/// identical in law to projecting a fresh h_re (see the property tests).
double sample_jam_gain(const SystemConfig& config, RandomStream& rng);

/// Main pair plus relay channels when the scheme calls for them.
ChannelRealization sample_realization(const SystemConfig& config, RandomStream& rng);

/// Column-orthonormal basis of the orthogonal complement of h: K-1 columns
/// of length K, each orthogonal to h to machine precision (Householder).
std::vector<cvec> null_space_basis(const cvec& h);

/// AN vector a = Z v with v i.i.d. CN(0, 1); E|a|^2 = K-1.
AnVector make_an_vector(const std::vector<cvec>& basis, AnVector::Owner owner,
                        RandomStream& rng);

}  // namespace secsim
