#pragma once

#include <cmath>
#include <cstdint>

namespace ionclock {

// Counter-based deterministic RNG. Every stochastic draw in a simulation
// comes from a stream keyed by (seed, channel, index, ...), so results are
// independent of evaluation order and identical seeds give bit-identical
// runs, also when replicas execute in parallel.

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t mix(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (0x9E3779B97F4A7C15ull + (b << 6) + (b >> 2)));
}

}  // namespace detail

class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t key_a, uint64_t key_b = 0,
            uint64_t key_c = 0, uint64_t key_d = 0) {
    state_ = detail::splitmix64(seed);
    state_ = detail::mix(state_, key_a);
    state_ = detail::mix(state_, key_b);
    state_ = detail::mix(state_, key_c);
    state_ = detail::mix(state_, key_d);
  }

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + uniform() * (b - a); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; consumes two uniforms per call.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double gaussian(double mean, double sigma) {
    return mean + sigma * gaussian();
  }

  // Waiting time of a Poisson process with the given rate.
  double exponential(double rate) {
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    return -std::log(u) / rate;
  }

  // Poisson sample; exact inversion for small means, Gaussian tail otherwise
  // (error is negligible above lambda ~ 50 for our uses).
  uint64_t poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda > 50.0) {
      double x = gaussian(lambda, std::sqrt(lambda));
      return x <= 0.0 ? 0 : static_cast<uint64_t>(x + 0.5);
    }
    double l = std::exp(-lambda);
    double p = 1.0;
    uint64_t k = 0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }

 private:
  uint64_t state_;
};

}  // namespace ionclock
