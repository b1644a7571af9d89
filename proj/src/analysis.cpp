#include "mfmab/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "mfmab/bandit.hpp"
#include "mfmab/reward_model.hpp"

namespace mfmab {

namespace {

inline double normal_cdf(double x, const NetworkConfig& cfg) {
  return 0.5 * (1.0 + std::erf((x - cfg.mu_s) / (M_SQRT2 * cfg.sigma_s)));
}

inline double truncation_mass(const NetworkConfig& cfg) {
  return normal_cdf(cfg.s_b, cfg) - normal_cdf(cfg.s_a, cfg);
}

}  // namespace

double lipschitz_constant(double theta, const NetworkConfig& cfg) {
  const double r = spectral_efficiency(theta, cfg);
  const double z = truncation_mass(cfg);
  const double m = static_cast<double>(cfg.m);
  const double fixed_term = cfg.rho * cfg.nu * cfg.F;
  return m * cfg.d_max * cfg.F * cfg.B * r * (cfg.c * cfg.B * r + cfg.F) /
         (std::sqrt(2.0 * M_PI) * cfg.sigma_s * z * fixed_term * fixed_term);
}

double q_derivative_f(double theta, double f, const NetworkConfig& cfg) {
  const double r = spectral_efficiency(theta, cfg);
  const double tau = success_threshold_bits_r(r, f, cfg);
  if (tau <= cfg.s_a || tau >= cfg.s_b) return 0.0;  // clamped region
  const double m = static_cast<double>(cfg.m);
  const double congestion = cfg.c * cfg.B * r + cfg.F;
  const double denom = m * f * congestion + cfg.rho * cfg.nu * cfg.F;
  const double dtau_df = -tau * m * congestion / denom;
  const double u = (tau - cfg.mu_s) / cfg.sigma_s;
  const double density = std::exp(-0.5 * u * u) / (std::sqrt(2.0 * M_PI) * cfg.sigma_s);
  return density * dtau_df / truncation_mass(cfg);
}

UniquenessReport uniqueness_check(const NetworkConfig& cfg) {
  UniquenessReport report;
  report.L = lipschitz_constant(1.0, cfg);
  report.beta = cfg.beta;
  report.condition_value = cfg.beta * (1.0 + report.L);
  report.holds = report.condition_value < 1.0;
  return report;
}

double pushforward_theta(double alpha, double theta, double f, const NetworkConfig& cfg) {
  if (alpha <= 0.0) return 0.0;
  if (alpha >= 1.0) return theta;
  const double target = alpha * success_probability(theta, f, cfg);
  double lo = 0.0;
  double hi = theta;
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double q = success_probability(mid, f, cfg);
    if (std::abs(q - target) < 1e-12) return mid;
    (q < target ? lo : hi) = mid;
  }
  return mid;
}

double theta_cdf(double x, const NetworkConfig& cfg) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = x * cfg.gamma_max / cfg.p0;  // P(theta <= x) = 1 - E_I[exp(-a(I+N0))]
  const double width = cfg.I_max - cfg.I_min;
  double survivor;
  if (width == 0.0) {
    survivor = std::exp(-a * (cfg.I_min + cfg.N0));
  } else {
    survivor = (std::exp(-a * (cfg.I_min + cfg.N0)) - std::exp(-a * (cfg.I_max + cfg.N0))) /
               (a * width);
  }
  return 1.0 - survivor;
}

double theta_quantile(double q, const NetworkConfig& cfg) {
  if (q <= 0.0) return 0.0;
  if (q >= 1.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (theta_cdf(mid, cfg) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<TypeAtom> discretize_type_distribution(const NetworkConfig& cfg,
                                                   int atoms_per_arm) {
  if (atoms_per_arm < 1) throw std::invalid_argument("atoms_per_arm must be >= 1");
  std::vector<double> levels(atoms_per_arm);
  for (int j = 0; j < atoms_per_arm; ++j)
    levels[j] = theta_quantile((j + 0.5) / atoms_per_arm, cfg);

  long long total = 1;
  for (int i = 0; i < cfg.n; ++i) {
    total *= atoms_per_arm;
    if (total > 4096) throw std::invalid_argument("atoms_per_arm^n too large to enumerate");
  }

  std::vector<TypeAtom> atoms(static_cast<size_t>(total));
  const double weight = 1.0 / static_cast<double>(total);
  for (long long idx = 0; idx < total; ++idx) {
    TypeAtom atom;
    atom.theta = Vec(cfg.n);
    atom.weight = weight;
    long long rest = idx;
    for (int i = 0; i < cfg.n; ++i) {
      atom.theta[i] = levels[rest % atoms_per_arm];
      rest /= atoms_per_arm;
    }
    atoms[static_cast<size_t>(idx)] = std::move(atom);
  }
  return atoms;
}

namespace {

// Truncated counter space: every win/loss counter lives in [0, cap].
struct StateSpace {
  int n;
  int cap;
  int digits;        // 2n counters
  long long states;  // (cap+1)^(2n)

  StateSpace(int arms, int counter_cap) : n(arms), cap(counter_cap), digits(2 * arms) {
    states = 1;
    for (int d = 0; d < digits; ++d) {
      states *= cap + 1;
      if (states > 2'000'000) throw std::invalid_argument("oracle state space too large");
    }
  }

  // Counter layout per state index: wins[0..n) then losses[0..n), base cap+1.
  void decode(long long idx, std::vector<int>& wins, std::vector<int>& losses) const {
    for (int i = 0; i < n; ++i) {
      wins[i] = static_cast<int>(idx % (cap + 1));
      idx /= cap + 1;
    }
    for (int i = 0; i < n; ++i) {
      losses[i] = static_cast<int>(idx % (cap + 1));
      idx /= cap + 1;
    }
  }

  long long stride_win(int arm) const {
    long long s = 1;
    for (int d = 0; d < arm; ++d) s *= cap + 1;
    return s;
  }

  long long stride_loss(int arm) const {
    long long s = 1;
    for (int d = 0; d < n + arm; ++d) s *= cap + 1;
    return s;
  }
};

}  // namespace

OracleResult steady_profile_oracle(const NetworkConfig& cfg, const Vec& alpha, int cap,
                                   const std::vector<TypeAtom>& atoms,
                                   const OracleOptions& options) {
  cfg.validate();
  if (cap < 1) throw std::invalid_argument("oracle cap must be >= 1");
  if (atoms.empty()) throw std::invalid_argument("oracle needs at least one type atom");
  if (alpha.size() != cfg.n) throw std::invalid_argument("alpha dimension != n");
  const StateSpace space(cfg.n, cap);
  const int n = cfg.n;
  const auto n_states = space.states;
  const int n_atoms = static_cast<int>(atoms.size());

  // Selection probabilities and saturating transitions, precomputed per state.
  Mat sigma(n_states, n);
  MatIRM win_next(n_states, n);
  MatIRM loss_next(n_states, n);
  {
    std::vector<int> wins(n), losses(n);
    for (long long z = 0; z < n_states; ++z) {
      space.decode(z, wins, losses);
      int alive = 0;
      for (int i = 0; i < n; ++i) alive += wins[i] + losses[i];
      sigma.row(z) = ucb_distribution_counts(wins, losses, alive);
      for (int i = 0; i < n; ++i) {
        win_next(z, i) = static_cast<int>(wins[i] < cap ? z + space.stride_win(i) : z);
        loss_next(z, i) = static_cast<int>(losses[i] < cap ? z + space.stride_loss(i) : z);
      }
    }
  }

  // State measure per atom; everyone starts freshly regenerated.
  Mat mu = Mat::Zero(n_atoms, n_states);
  for (int a = 0; a < n_atoms; ++a) mu(a, 0) = atoms[a].weight;

  OracleResult result;
  result.profile = Vec::Constant(n, 1.0 / n);
  Mat next = Mat::Zero(n_atoms, n_states);
  Vec f_prev = result.profile;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Regeneration: beta of the mass continues, the rest restarts at state 0
    // with a fresh type.
    mu *= cfg.beta;
    for (int a = 0; a < n_atoms; ++a) mu(a, 0) += (1.0 - cfg.beta) * atoms[a].weight;

    const Vec occupancy = mu.colwise().sum().transpose();
    const Vec f = sigma.transpose() * occupancy;

    next.setZero();
    for (int a = 0; a < n_atoms; ++a) {
      Vec win_prob(n);
      for (int i = 0; i < n; ++i)
        win_prob[i] = alpha[i] * success_probability(atoms[a].theta[i], f[i], cfg);
      for (long long z = 0; z < n_states; ++z) {
        const double mass = mu(a, z);
        if (mass == 0.0) continue;
        for (int i = 0; i < n; ++i) {
          const double moving = mass * sigma(z, i);
          if (moving == 0.0) continue;
          next(a, win_next(z, i)) += moving * win_prob[i];
          next(a, loss_next(z, i)) += moving * (1.0 - win_prob[i]);
        }
      }
    }
    mu.swap(next);
    mu /= mu.sum();  // counter FP drift

    result.profile = f;
    result.iterations = iter + 1;
    if (iter > 0 && (f - f_prev).lpNorm<Eigen::Infinity>() < options.tol) {
      result.converged = true;
      break;
    }
    f_prev = f;
  }
  return result;
}

OracleResult steady_profile_oracle(const NetworkConfig& cfg, const Vec& alpha, int cap,
                                   const OracleOptions& options) {
  int per_arm = 1;
  while (std::pow(per_arm + 1, cfg.n) <= 8.0) ++per_arm;
  return steady_profile_oracle(cfg, alpha, cap, discretize_type_distribution(cfg, per_arm),
                               options);
}

}  // namespace mfmab
