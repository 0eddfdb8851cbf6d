// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace starshare {

/// Deterministic random stream. Gaussian draws are produced by an explicit
/// Box-Muller transform so that a given seed yields the same sequence on
/// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so that small seeds decorrelate quickly.
    for (int i = 0; i < 4; ++i) next_u64();
  }

  /// Derives an independent child stream, e.g. one per Monte Carlo trial.
  static std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ (0x9e3779b97f4a7c15ULL + splitmix64(index + 1)));
  }

  std::uint64_t next_u64() {
    state_ = splitmix64_step(state_);
    return splitmix64_mix(state_);
  }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Circularly-symmetric complex normal, unit variance: E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  static std::uint64_t splitmix64_step(std::uint64_t x) {
    return x + 0x9e3779b97f4a7c15ULL;
  }
  static std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t splitmix64(std::uint64_t x) {
    return splitmix64_mix(splitmix64_step(x));
  }

  std::uint64_t state_;
};

}  // namespace starshare
