#pragma once

#include <cmath>
#include <cstdint>

namespace mfmab {

// Counter-free splitmix64 generator. One instance per (seed, agent, round,
// phase) stream keeps the simulation deterministic regardless of how the
// per-agent loops are scheduled across threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream key for the draws of one agent in one round and phase.
inline constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t agent,
                                          std::uint64_t round, std::uint64_t phase) {
  return mix64(mix64(mix64(mix64(seed) ^ agent) ^ round) ^ phase);
}

// Uniform on the open interval (0, 1); never returns an exact endpoint, so
// log() and Bernoulli comparisons against 0/1 behave.
template <class Rng>
double uniform01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

template <class Rng>
double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

template <class Rng>
int uniform_index(Rng& rng, int count) {
  const int k = static_cast<int>(uniform01(rng) * count);
  return k < count ? k : count - 1;
}

// Exponential(1) via inverse CDF.
template <class Rng>
double exponential1(Rng& rng) {
  return -std::log1p(-uniform01(rng));
}

// Standard normal, Box-Muller (cosine branch only).
template <class Rng>
double std_normal(Rng& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace mfmab
