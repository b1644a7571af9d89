#include "mfmab/bandit.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mfmab {

namespace detail {

namespace {
constexpr int kLogTableSize = 4096;
const std::array<double, kLogTableSize>& log_table() {
  static const std::array<double, kLogTableSize> table = [] {
    std::array<double, kLogTableSize> t{};
    for (int i = 1; i < kLogTableSize; ++i) t[i] = std::log(static_cast<double>(i));
    return t;
  }();
  return table;
}
}  // namespace

double cached_log(int t) {
  if (t > 0 && t < kLogTableSize) return log_table()[t];
  return std::log(static_cast<double>(t));
}

}  // namespace detail

Vec ucb_distribution_counts(std::span<const int> wins, std::span<const int> losses,
                            int rounds_alive) {
  const int n = static_cast<int>(wins.size());
  Vec probs = Vec::Zero(n);
  int unpulled = 0;
  for (int i = 0; i < n; ++i)
    if (wins[i] + losses[i] == 0) ++unpulled;
  if (unpulled > 0) {
    for (int i = 0; i < n; ++i)
      if (wins[i] + losses[i] == 0) probs[i] = 1.0 / unpulled;
    return probs;
  }
  double best = -1.0;
  int ties = 0;
  for (int i = 0; i < n; ++i) {
    const double index = detail::ucb_index(wins[i], wins[i] + losses[i], rounds_alive);
    if (index > best) {
      best = index;
      ties = 1;
    } else if (index == best) {
      ++ties;
    }
  }
  for (int i = 0; i < n; ++i) {
    const double index = detail::ucb_index(wins[i], wins[i] + losses[i], rounds_alive);
    if (index == best) probs[i] = 1.0 / ties;
  }
  return probs;
}

Vec ucb_distribution(const AgentState& state) {
  return ucb_distribution_counts(
      std::span<const int>(state.wins.data(), state.wins.size()),
      std::span<const int>(state.losses.data(), state.losses.size()), state.rounds_alive);
}

Agent Population::agent(int k) const {
  Agent a(arms());
  a.theta = theta.row(k);
  a.state.wins = wins.row(k);
  a.state.losses = losses.row(k);
  a.state.rounds_alive = rounds_alive[k];
  return a;
}

void Population::refresh_spectral_row(int k, const NetworkConfig& cfg) {
  for (int i = 0; i < arms(); ++i) spectral(k, i) = spectral_efficiency(theta(k, i), cfg);
}

namespace {

constexpr std::uint64_t kPhaseInit = 0;
constexpr std::uint64_t kPhaseDecide = 1;
constexpr std::uint64_t kPhaseReward = 2;

void check_alpha(const Vec& alpha, int n) {
  if (alpha.size() != n) throw std::invalid_argument("alpha dimension != number of arms");
  for (int i = 0; i < n; ++i)
    if (!(alpha[i] >= 0.0 && alpha[i] <= 1.0))
      throw std::invalid_argument("alpha components must lie in [0, 1]");
}

}  // namespace

Population make_population(const NetworkConfig& cfg, std::uint64_t seed) {
  Population pop(cfg.m, cfg.n);
  for (int k = 0; k < cfg.m; ++k) {
    SplitMix64 rng(stream_key(seed, k, 0, kPhaseInit));
    sample_type_into(std::span<double>(pop.theta.row(k).data(), cfg.n), cfg, rng);
    pop.refresh_spectral_row(k, cfg);
  }
  return pop;
}

StepResult step(Population& pop, const Vec& alpha, const NetworkConfig& cfg,
                std::uint64_t seed, int round, int threads) {
  const int m = pop.size();
  const int n = pop.arms();
  check_alpha(alpha, n);

  std::vector<int> choice(m);

#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
  for (int k = 0; k < m; ++k) {
    SplitMix64 rng(stream_key(seed, k, static_cast<std::uint64_t>(round), kPhaseDecide));
    const bool regenerated = maybe_regenerate_counts(
        std::span<int>(pop.wins.row(k).data(), n), std::span<int>(pop.losses.row(k).data(), n),
        pop.rounds_alive[k], std::span<double>(pop.theta.row(k).data(), n), cfg, rng);
    if (regenerated) pop.refresh_spectral_row(k, cfg);
    choice[k] = ucb_select_counts(std::span<const int>(pop.wins.row(k).data(), n),
                                  std::span<const int>(pop.losses.row(k).data(), n),
                                  pop.rounds_alive[k], rng);
  }

  VecI counts = VecI::Zero(n);
  for (int k = 0; k < m; ++k) ++counts[choice[k]];
  Vec profile = counts.cast<double>() / static_cast<double>(m);

  long long total_wins = 0;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : total_wins) \
    if (threads > 1)
  for (int k = 0; k < m; ++k) {
    SplitMix64 rng(stream_key(seed, k, static_cast<std::uint64_t>(round), kPhaseReward));
    const int i = choice[k];
    const double p = alpha[i] * success_probability_r(pop.spectral(k, i), profile[i], cfg);
    const bool win = uniform01(rng) < p;
    if (win) {
      ++pop.wins(k, i);
      ++total_wins;
    } else {
      ++pop.losses(k, i);
    }
    ++pop.rounds_alive[k];
  }

  return {std::move(profile), static_cast<double>(total_wins) / static_cast<double>(m)};
}

SimulationTrace simulate(const NetworkConfig& cfg, const Vec& alpha, int rounds,
                         std::uint64_t seed, int threads) {
  cfg.validate();
  check_alpha(alpha, cfg.n);
  if (rounds < 1) throw std::invalid_argument("simulate: rounds must be >= 1");

  Population pop = make_population(cfg, seed);
  SimulationTrace trace;
  trace.profiles.resize(rounds, cfg.n);
  trace.mean_reward.resize(rounds);
  trace.seed = seed;
  for (int t = 0; t < rounds; ++t) {
    StepResult result = step(pop, alpha, cfg, seed, t, threads);
    trace.profiles.row(t) = result.profile;
    trace.mean_reward[t] = result.mean_reward;
  }
  return trace;
}

Vec average_profile(const SimulationTrace& trace, int window) {
  const auto rounds = trace.profiles.rows();
  if (window < 1) throw std::invalid_argument("average_profile: window must be >= 1");
  if (window > rounds)
    throw std::invalid_argument("average_profile: window exceeds trace length");
  return trace.profiles.bottomRows(window).colwise().mean();
}

}  // namespace mfmab
