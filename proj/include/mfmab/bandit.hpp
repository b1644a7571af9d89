#pragma once

#include <cstdint>
#include <span>

#include "mfmab/network_config.hpp"
#include "mfmab/reward_model.hpp"
#include "mfmab/rng.hpp"
#include "mfmab/types.hpp"

namespace mfmab {

// Per-arm win/loss counters since the agent's last regeneration.
struct AgentState {
  VecI wins;
  VecI losses;
  int rounds_alive = 0;

  explicit AgentState(int arms) : wins(VecI::Zero(arms)), losses(VecI::Zero(arms)) {}

  void reset() {
    wins.setZero();
    losses.setZero();
    rounds_alive = 0;
  }
};

struct Agent {
  Vec theta;
  AgentState state;

  explicit Agent(int arms) : theta(Vec::Zero(arms)), state(arms) {}
};

namespace detail {

double cached_log(int t);

// UCB1 index of one arm; only valid for pulls >= 1.
inline double ucb_index(int wins, int pulls, int rounds_alive) {
  return static_cast<double>(wins) / pulls +
         std::sqrt(2.0 * cached_log(rounds_alive) / pulls);
}

}  // namespace detail

// UCB arm selection: a uniformly random unpulled arm while any exists, else
// the argmax of the UCB1 index with uniform tie-breaking.
template <class Rng>
int ucb_select_counts(std::span<const int> wins, std::span<const int> losses,
                      int rounds_alive, Rng& rng) {
  const int n = static_cast<int>(wins.size());
  int unpulled = 0;
  for (int i = 0; i < n; ++i)
    if (wins[i] + losses[i] == 0) ++unpulled;
  if (unpulled > 0) {
    int pick = uniform_index(rng, unpulled);
    for (int i = 0; i < n; ++i) {
      if (wins[i] + losses[i] == 0 && pick-- == 0) return i;
    }
  }
  double best = -1.0;
  int best_arm = 0;
  int ties = 0;
  for (int i = 0; i < n; ++i) {
    const double index = detail::ucb_index(wins[i], wins[i] + losses[i], rounds_alive);
    if (index > best) {
      best = index;
      best_arm = i;
      ties = 1;
    } else if (index == best) {
      ++ties;
    }
  }
  if (ties == 1) return best_arm;
  int pick = uniform_index(rng, ties);
  for (int i = best_arm; i < n; ++i) {
    if (detail::ucb_index(wins[i], wins[i] + losses[i], rounds_alive) == best && pick-- == 0)
      return i;
  }
  return best_arm;  // unreachable
}

// Exact selection probabilities of ucb_select_counts for one state.
Vec ucb_distribution_counts(std::span<const int> wins, std::span<const int> losses,
                            int rounds_alive);

template <class Rng>
int ucb_select(const AgentState& state, Rng& rng) {
  return ucb_select_counts(std::span<const int>(state.wins.data(), state.wins.size()),
                           std::span<const int>(state.losses.data(), state.losses.size()),
                           state.rounds_alive, rng);
}

Vec ucb_distribution(const AgentState& state);

// With probability 1 - beta the agent regenerates: counters reset, fresh type.
// Returns whether regeneration happened.
template <class Rng>
bool maybe_regenerate_counts(std::span<int> wins, std::span<int> losses, int& rounds_alive,
                             std::span<double> theta, const NetworkConfig& cfg, Rng& rng) {
  if (uniform01(rng) >= 1.0 - cfg.beta) return false;
  for (int& w : wins) w = 0;
  for (int& l : losses) l = 0;
  rounds_alive = 0;
  sample_type_into(theta, cfg, rng);
  return true;
}

template <class Rng>
bool regenerate_if_needed(Agent& agent, const NetworkConfig& cfg, Rng& rng) {
  return maybe_regenerate_counts(
      std::span<int>(agent.state.wins.data(), agent.state.wins.size()),
      std::span<int>(agent.state.losses.data(), agent.state.losses.size()),
      agent.state.rounds_alive, std::span<double>(agent.theta.data(), agent.theta.size()),
      cfg, rng);
}

// Structure-of-arrays population; row k holds agent k.
struct Population {
  MatRM theta;       // normalized SINR per agent and arm
  MatRM spectral;    // cached r(theta), refreshed on regeneration
  MatIRM wins;
  MatIRM losses;
  VecI rounds_alive;

  Population(int agents, int arms)
      : theta(MatRM::Zero(agents, arms)),
        spectral(MatRM::Zero(agents, arms)),
        wins(MatIRM::Zero(agents, arms)),
        losses(MatIRM::Zero(agents, arms)),
        rounds_alive(VecI::Zero(agents)) {}

  int size() const { return static_cast<int>(theta.rows()); }
  int arms() const { return static_cast<int>(theta.cols()); }

  Agent agent(int k) const;
  void refresh_spectral_row(int k, const NetworkConfig& cfg);
};

// Fresh population: types drawn from the channel model, all counters zero.
Population make_population(const NetworkConfig& cfg, std::uint64_t seed);

struct StepResult {
  Vec profile;
  double mean_reward = 0.0;
};

// One simulation round. Phase A: every agent regenerates-or-not and selects an
// arm from its pre-round state. Phase B: the realized profile. Phase C: every
// agent draws a reward against the same round's profile and updates counters.
// Per-agent draws are keyed by (seed, agent, round, phase), so results are
// identical for any `threads`.
StepResult step(Population& pop, const Vec& alpha, const NetworkConfig& cfg,
                std::uint64_t seed, int round, int threads = 1);

struct SimulationTrace {
  Mat profiles;      // one row per round
  Vec mean_reward;   // per-round average reward
  std::uint64_t seed = 0;
};

SimulationTrace simulate(const NetworkConfig& cfg, const Vec& alpha, int rounds,
                         std::uint64_t seed, int threads = 1);

// Component-wise mean of the last `window` profiles.
Vec average_profile(const SimulationTrace& trace, int window);

}  // namespace mfmab
