#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "mfmab/network_config.hpp"
#include "mfmab/rng.hpp"
#include "mfmab/types.hpp"

namespace mfmab {

// Spectral efficiency of a link with normalized SINR theta:
// r(theta) = log2(1 + gamma_max * theta). Throws std::domain_error outside [0,1].
double spectral_efficiency(double theta, const NetworkConfig& cfg);

// Normalized SINR for a channel gain h and interference draw, clipped to 1.
inline double normalized_sinr(double h, double interference, const NetworkConfig& cfg) {
  return std::min(1.0, cfg.p0 * h / ((interference + cfg.N0) * cfg.gamma_max));
}

// Uplink + downlink + processing delay of offloading s_bits to a server whose
// load fraction is f. Returns +infinity when theta == 0 (zero spectral
// efficiency means the task never completes).
double total_delay(double theta, double f, double s_bits, const NetworkConfig& cfg);

// CDF of the task-size law: Normal(mu_s, sigma_s) truncated to [s_a, s_b].
double truncated_normal_cdf(double s_bits, const NetworkConfig& cfg);

// Largest task size that still meets the deadline at (theta, f):
// d_max * F * B * r / (m * f * (c * B * r + F) + rho * nu * F).
double success_threshold_bits(double theta, double f, const NetworkConfig& cfg);
double success_threshold_bits_r(double r, double f, const NetworkConfig& cfg);

// Probability that a random task offloaded at (theta, f) meets the deadline.
// Non-increasing in f, non-decreasing in theta, exactly 0 at theta == 0.
double success_probability(double theta, double f, const NetworkConfig& cfg);

// Same, with the spectral efficiency already evaluated (hot-loop variant).
inline double success_probability_r(double r, double f, const NetworkConfig& cfg) {
  return truncated_normal_cdf(success_threshold_bits_r(r, f, cfg), cfg);
}

// Fills theta[i] = min(1, (p0 * h / (I + N0)) / gamma_max) with h ~ Exp(1) and
// I ~ Uniform[I_min, I_max], independently per arm.
template <class Rng>
void sample_type_into(std::span<double> theta, const NetworkConfig& cfg, Rng& rng) {
  for (double& t : theta) {
    const double h = exponential1(rng);
    const double interference = uniform_in(rng, cfg.I_min, cfg.I_max);
    t = normalized_sinr(h, interference, cfg);
  }
}

template <class Rng>
Vec sample_type(const NetworkConfig& cfg, Rng& rng) {
  Vec theta(cfg.n);
  sample_type_into(std::span<double>(theta.data(), theta.size()), cfg, rng);
  return theta;
}

// Truncated-normal task size by rejection from the underlying normal.
template <class Rng>
double sample_task_size(const NetworkConfig& cfg, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const double s = cfg.mu_s + cfg.sigma_s * std_normal(rng);
    if (s >= cfg.s_a && s <= cfg.s_b) return s;
  }
  throw std::runtime_error("sample_task_size: rejection kept missing [s_a, s_b]");
}

// Bernoulli deadline reward, scaled by the load-balancer's per-arm alpha.
template <class Rng>
bool sample_reward(double theta, double f, double alpha, const NetworkConfig& cfg, Rng& rng) {
  return uniform01(rng) < alpha * success_probability(theta, f, cfg);
}

}  // namespace mfmab
