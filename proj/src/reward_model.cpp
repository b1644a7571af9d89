#include "mfmab/reward_model.hpp"

#include <cmath>
#include <limits>

namespace mfmab {

double spectral_efficiency(double theta, const NetworkConfig& cfg) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::domain_error("spectral_efficiency: theta outside [0, 1]");
  return std::log2(1.0 + cfg.gamma_max * theta);
}

double total_delay(double theta, double f, double s_bits, const NetworkConfig& cfg) {
  const double r = spectral_efficiency(theta, cfg);
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  const double m = static_cast<double>(cfg.m);
  const double processing = cfg.c * m * s_bits * f / cfg.F;
  const double uplink = s_bits * m * f / (cfg.B * r);
  const double downlink = cfg.rho * s_bits * cfg.nu / (cfg.B * r);
  return processing + uplink + downlink;
}

namespace {

// Standard normal CDF with the task-size normalization baked in.
inline double normal_cdf(double x, const NetworkConfig& cfg) {
  return 0.5 * (1.0 + std::erf((x - cfg.mu_s) / (M_SQRT2 * cfg.sigma_s)));
}

}  // namespace

double truncated_normal_cdf(double s_bits, const NetworkConfig& cfg) {
  if (s_bits <= cfg.s_a) return 0.0;
  if (s_bits >= cfg.s_b) return 1.0;
  const double z = normal_cdf(cfg.s_b, cfg) - normal_cdf(cfg.s_a, cfg);
  const double p = (normal_cdf(s_bits, cfg) - normal_cdf(cfg.s_a, cfg)) / z;
  return std::clamp(p, 0.0, 1.0);
}

double success_threshold_bits_r(double r, double f, const NetworkConfig& cfg) {
  const double m = static_cast<double>(cfg.m);
  return cfg.d_max * cfg.F * cfg.B * r /
         (m * f * (cfg.c * cfg.B * r + cfg.F) + cfg.rho * cfg.nu * cfg.F);
}

double success_threshold_bits(double theta, double f, const NetworkConfig& cfg) {
  return success_threshold_bits_r(spectral_efficiency(theta, cfg), f, cfg);
}

double success_probability(double theta, double f, const NetworkConfig& cfg) {
  if (!(f >= 0.0 && f <= 1.0))
    throw std::domain_error("success_probability: f outside [0, 1]");
  return truncated_normal_cdf(success_threshold_bits(theta, f, cfg), cfg);
}

}  // namespace mfmab
