#pragma once

#include <vector>

#include "mfmab/network_config.hpp"
#include "mfmab/types.hpp"

namespace mfmab {

// Existence/uniqueness condition of the stationary population profile:
// beta * (1 + L) < 1 with L the worst-case Lipschitz constant of the success
// probability in f.
struct UniquenessReport {
  double L = 0.0;
  double beta = 0.0;
  double condition_value = 0.0;
  bool holds = false;
};

// Uniform upper bound on |dQ/df| over f in [0, 1] for a fixed type:
// L(theta) = m * d_max * F * B * r * (c * B * r + F) /
//            (sqrt(2*pi) * sigma_s * Z * (rho * nu * F)^2).
double lipschitz_constant(double theta, const NetworkConfig& cfg);

// Exact signed dQ/df of the (clamped) success probability; zero wherever the
// threshold falls outside (s_a, s_b).
double q_derivative_f(double theta, double f, const NetworkConfig& cfg);

// Evaluates the condition at theta = 1, the worst case over types.
UniquenessReport uniqueness_check(const NetworkConfig& cfg);

// Type theta' in [0, theta] with Q(theta', f) = alpha * Q(theta, f), found by
// bisection; exact to |Q(theta', f) - alpha * Q(theta, f)| < 1e-10.
double pushforward_theta(double alpha, double theta, double f, const NetworkConfig& cfg);

// One point mass of a discretized type distribution.
struct TypeAtom {
  Vec theta;
  double weight = 0.0;
};

// Marginal CDF of a single normalized-SINR component (closed form; the
// interference integral has an elementary antiderivative).
double theta_cdf(double x, const NetworkConfig& cfg);
double theta_quantile(double q, const NetworkConfig& cfg);

// Product discretization of the type law: atoms_per_arm quantile midpoints on
// each arm, combined across arms (atoms_per_arm^n atoms, equal weights).
std::vector<TypeAtom> discretize_type_distribution(const NetworkConfig& cfg,
                                                   int atoms_per_arm);

struct OracleOptions {
  double tol = 1e-8;      // sup-norm change of the profile between iterations
  int max_iterations = 10000;
};

struct OracleResult {
  Vec profile;
  bool converged = false;
  int iterations = 0;
};

// Desk-scale fixed point of the exact population dynamics on a truncated
// state space: win/loss counters saturate at `cap`, types restricted to the
// given atoms. Iterates the measure update under the UCB policy, reward
// probabilities alpha_i * Q(theta_i, f_i) and geometric regeneration until the
// profile stops moving.
OracleResult steady_profile_oracle(const NetworkConfig& cfg, const Vec& alpha, int cap,
                                   const std::vector<TypeAtom>& atoms,
                                   const OracleOptions& options = {});

// Convenience overload: auto-discretizes with the largest atoms_per_arm such
// that atoms_per_arm^n <= 8.
OracleResult steady_profile_oracle(const NetworkConfig& cfg, const Vec& alpha, int cap,
                                   const OracleOptions& options = {});

}  // namespace mfmab
