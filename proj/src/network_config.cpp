#include "mfmab/network_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mfmab {

double NetworkConfig::default_gamma_max(double p0, double I_min, double N0) {
  const double q999 = -std::log(1e-3);  // 99.9th percentile of Exponential(1)
  return p0 * q999 / (I_min + N0);
}

void NetworkConfig::validate(bool require_deadline) const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("NetworkConfig: " + what);
  };
  require(m >= 1, "m must be a positive integer");
  require(n >= 1, "n must be a positive integer");
  require(B > 0.0, "B must be positive");
  require(F > 0.0, "F must be positive");
  require(c > 0.0, "c must be positive");
  require(rho > 0.0, "rho must be positive");
  require(nu > 0.0, "nu must be positive");
  require(p0 > 0.0, "p0 must be positive");
  require(N0 > 0.0, "N0 must be positive");
  require(I_min > 0.0 && I_min <= I_max, "interference bounds need 0 < I_min <= I_max");
  require(gamma_max > 0.0, "gamma_max must be positive");
  require(s_a > 0.0 && s_a < s_b, "task bounds need 0 < s_a < s_b");
  require(sigma_s > 0.0, "sigma_s must be positive");
  require(mu_s > 0.0, "mu_s must be positive");
  require(beta > 0.0 && beta < 1.0, "beta must lie in (0, 1)");
  if (require_deadline) require(d_max > 0.0, "d_max must be positive (calibrate or pin it)");
}

}  // namespace mfmab
