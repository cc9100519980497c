// Copyright 2026 The addon-rm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "addon/learner.hpp"

#include <algorithm>
#include <cmath>

#include "addon/errors.hpp"
#include "addon/fptas.hpp"
#include "addon/oracle.hpp"
#include "addon/rng.hpp"

namespace addon {

double CounterTable::mean(std::size_t r, std::size_t c) const {
  const std::uint64_t n = trials(r, c);
  return n == 0 ? 0.0 : static_cast<double>(successes(r, c)) / static_cast<double>(n);
}

LearnerState::LearnerState(const Instance& instance)
    : shape_(instance),
      core_(instance.n_core, instance.grid.core.size()),
      supportive_(instance.n_supportive, instance.grid.supportive.size()),
      addon_discount_(instance.n_supportive, instance.grid.addon.size()),
      addon_original_(instance.n_supportive, instance.grid.supportive.size()) {
  shape_.demand = {};
}

const CounterTable& LearnerState::table(CounterKind kind) const {
  switch (kind) {
    case CounterKind::kCore:
      return core_;
    case CounterKind::kSupportive:
      return supportive_;
    case CounterKind::kAddonDiscount:
      return addon_discount_;
    case CounterKind::kAddonOriginal:
      return addon_original_;
  }
  return core_;
}

CounterTable& LearnerState::mutable_table(CounterKind kind) {
  return const_cast<CounterTable&>(std::as_const(*this).table(kind));
}

std::uint64_t LearnerState::count(const CounterCell& cell) const {
  return table(cell.kind).trials(cell.product, cell.price);
}

double LearnerState::mean(const CounterCell& cell) const {
  return table(cell.kind).mean(cell.product, cell.price);
}

void LearnerState::observe(const CounterCell& cell, std::uint64_t successes,
                           std::uint64_t trials) {
  auto& t = mutable_table(cell.kind);
  t.successes(cell.product, cell.price) += successes;
  t.trials(cell.product, cell.price) += trials;
}

double ucb_value(double mean, std::uint64_t count, double log_t, double scale) {
  if (count == 0) return 1.0;
  const double radius = std::sqrt(2.0 * log_t / static_cast<double>(count));
  return std::min(1.0, mean + scale * radius);
}

DemandTable ucb_demand_table(const LearnerState& state, double ucb_scale) {
  const double log_t = std::log(static_cast<double>(state.period()));
  auto optimistic = [&](const CounterTable& src) {
    ProbTable out(src.trials.rows(), src.trials.cols());
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) {
        out(r, c) = ucb_value(src.mean(r, c), src.trials(r, c), log_t, ucb_scale);
      }
    }
    return out;
  };
  return {optimistic(state.table(CounterKind::kCore)),
          optimistic(state.table(CounterKind::kSupportive)),
          optimistic(state.table(CounterKind::kAddonDiscount)),
          optimistic(state.table(CounterKind::kAddonOriginal))};
}

std::vector<CounterCell> policy_counters(const Policy& policy) {
  std::vector<CounterCell> cells;
  for (std::size_t n = 0; n < policy.core_prices.size(); ++n) {
    cells.push_back({CounterKind::kCore, n, policy.core_prices[n]});
  }
  for (std::size_t m = 0; m < policy.supportive.size(); ++m) {
    cells.push_back({CounterKind::kSupportive, m, policy.supportive[m].price});
  }
  for (std::size_t m = 0; m < policy.supportive.size(); ++m) {
    const auto& c = policy.supportive[m];
    if (c.discount) {
      cells.push_back({CounterKind::kAddonDiscount, m, *c.discount});
    } else {
      cells.push_back({CounterKind::kAddonOriginal, m, c.price});
    }
  }
  return cells;
}

EpisodeSnapshot begin_episode(LearnerState& state, double epsilon, double ucb_scale,
                              std::size_t resolution_cap) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
  if (!(ucb_scale > 0.0)) throw ConfigError("ucb scale must be positive");
  if (resolution_cap < 1) throw ConfigError("resolution cap must be at least 1");

  state.advance_episode();
  EpisodeSnapshot snap;
  snap.episode = state.episode();
  snap.start_period = state.period();

  const std::size_t wanted = std::max<std::size_t>(
      1, ceil_to_size(std::sqrt(static_cast<double>(state.period())) / epsilon));
  snap.resolution = std::min(wanted, resolution_cap);
  snap.resolution_capped = wanted > resolution_cap;

  Instance optimistic = state.shape();
  optimistic.demand = ucb_demand_table(state, ucb_scale);
  snap.policy = fptas_solve(optimistic, snap.resolution).policy;

  for (const auto& cell : policy_counters(snap.policy)) {
    snap.watched.push_back({cell, state.count(cell)});
  }
  return snap;
}

bool record_observation(LearnerState& state, const EpisodeSnapshot& snap,
                        const PeriodObservation& obs) {
  const Policy& policy = snap.policy;
  const std::size_t n_core = policy.core_prices.size();
  const std::size_t n_supp = policy.supportive.size();
  if (obs.core_purchases.size() != n_core ||
      obs.supportive_primary_purchases.size() != n_supp || obs.addon_trials.size() != n_supp) {
    throw InfeasibleError("observation dimensions do not match the policy");
  }
  const std::size_t buyers = obs.core_purchase_count();
  for (const auto& trials : obs.addon_trials) {
    if (trials.size() != buyers) {
      throw InfeasibleError("add-on trial count differs from the number of core purchases");
    }
  }

  for (std::size_t n = 0; n < n_core; ++n) {
    state.observe({CounterKind::kCore, n, policy.core_prices[n]}, obs.core_purchases[n], 1);
  }
  for (std::size_t m = 0; m < n_supp; ++m) {
    const auto& c = policy.supportive[m];
    state.observe({CounterKind::kSupportive, m, c.price}, obs.supportive_primary_purchases[m], 1);
    const CounterCell addon_cell = c.discount
                                       ? CounterCell{CounterKind::kAddonDiscount, m, *c.discount}
                                       : CounterCell{CounterKind::kAddonOriginal, m, c.price};
    const auto hits = static_cast<std::uint64_t>(
        std::count(obs.addon_trials[m].begin(), obs.addon_trials[m].end(), true));
    state.observe(addon_cell, hits, buyers);
  }
  state.advance_period();

  return std::any_of(snap.watched.begin(), snap.watched.end(), [&](const WatchedCounter& w) {
    const std::uint64_t now = state.count(w.cell);
    return w.start_value == 0 ? now >= 1 : now >= 2 * w.start_value;
  });
}

LearningRun run_learning(const Instance& gt, const LearningConfig& config) {
  if (config.horizon < 1) throw ConfigError("horizon must be at least 1");
  gt.validate();

  LearningRun run;
  run.seed = config.seed;
  run.trajectory.reserve(config.horizon);

  LearnerState state(gt);
  const DrawStream stream(config.seed);
  EpisodeSnapshot snap;
  double expected = 0.0;
  bool need_episode = true;

  for (std::uint64_t t = 1; t <= config.horizon; ++t) {
    if (need_episode) {
      snap = begin_episode(state, config.epsilon, config.ucb_scale, config.resolution_cap);
      expected = exact_policy_revenue(gt, snap.policy);
      run.episode_starts.push_back(t);
      run.max_resolution = std::max(run.max_resolution, snap.resolution);
      run.resolution_capped = run.resolution_capped || snap.resolution_capped;
    }
    const PeriodObservation obs = simulate_period(gt, snap.policy, stream, t);
    need_episode = record_observation(state, snap, obs);
    run.trajectory.push_back({t, snap.episode, expected, obs.revenue});
  }
  return run;
}

}  // namespace addon
