// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace secsim {

/// SplitMix64 step. Used only to derive engine seeds and substream keys.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Key for the index-th substream of the stream identified by `key`.
inline std::uint64_t derive_stream_key(std::uint64_t key, std::uint64_t index) {
  std::uint64_t s = key;
  s = splitmix64_next(s) ^ (0x9e3779b97f4a7c15ULL * (index + 0x632be59bd9b4e019ULL));
  return splitmix64_next(s);
}

/// Deterministic random stream with key-based substream derivation.
///
/// fork(i) depends only on the construction key, never on draw history, so
/// trial blocks and curve grid points obtain reproducible independent
/// streams regardless of how work is scheduled across threads. All variate
/// generation is self-contained (no std::*_distribution), which keeps the
/// draw sequence identical across standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(seed) {
    std::uint64_t s = seed;
    std::uint32_t init[8];
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t w = splitmix64_next(s);
      init[2 * i] = static_cast<std::uint32_t>(w);
      init[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
    }
    std::seed_seq seq(init, init + 8);
    engine_.seed(seq);
  }

  /// Independent substream; a pure function of (key, index).
  RandomStream fork(std::uint64_t index) const {
    return RandomStream(derive_stream_key(key_, index));
  }

  std::uint64_t key() const { return key_; }

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  double exponential(double mean) { return -mean * std::log(uniform()); }

  /// Standard normal (Box-Muller); the second variate of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> complex_normal(double variance) {
    const double mag = std::sqrt(-variance * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    return {mag * std::cos(t), mag * std::sin(t)};
  }

  /// Gamma variate with integer shape, as a sum of exponentials. The
  /// uniform product is folded every 16 factors so it cannot underflow.
  double gamma_int(int shape, double scale) {
    double log_acc = 0.0;
    double prod = 1.0;
    int in_chunk = 0;
    for (int i = 0; i < shape; ++i) {
      prod *= uniform();
      if (++in_chunk == 16) {
        log_acc += std::log(prod);
        prod = 1.0;
        in_chunk = 0;
      }
    }
    return -scale * (log_acc + std::log(prod));
  }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace secsim
