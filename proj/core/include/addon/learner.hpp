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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "addon/demand.hpp"
#include "addon/matrix.hpp"
#include "addon/policy.hpp"
#include "addon/sim.hpp"

namespace addon {

enum class CounterKind { kCore, kSupportive, kAddonDiscount, kAddonOriginal };

struct CounterCell {
  CounterKind kind = CounterKind::kCore;
  std::size_t product = 0;
  std::size_t price = 0;  // index into the grid of that counter kind
  bool operator==(const CounterCell&) const = default;
};

// 0/1 sample sums and counts for one demand type, one row per product.
struct CounterTable {
  Table<std::uint64_t> successes;
  Table<std::uint64_t> trials;

  CounterTable() = default;
  CounterTable(std::size_t rows, std::size_t cols) : successes(rows, cols), trials(rows, cols) {}
  double mean(std::size_t r, std::size_t c) const;
};

// Empirical means and counters of the UCB learner. Means are kept as exact
// success/trial counts.
class LearnerState {
 public:
  // Shape (N, M, S, grids) is taken from `instance`; its demand is ignored.
  explicit LearnerState(const Instance& instance);

  const Instance& shape() const { return shape_; }
  std::uint64_t period() const { return period_; }
  std::uint64_t episode() const { return episode_; }

  const CounterTable& table(CounterKind kind) const;
  std::uint64_t count(const CounterCell& cell) const;
  double mean(const CounterCell& cell) const;

  // Adds `trials` observations of which `successes` were purchases.
  void observe(const CounterCell& cell, std::uint64_t successes, std::uint64_t trials);
  void advance_period() { ++period_; }
  void advance_episode() { ++episode_; }

 private:
  CounterTable& mutable_table(CounterKind kind);

  Instance shape_;
  CounterTable core_;
  CounterTable supportive_;
  CounterTable addon_discount_;
  CounterTable addon_original_;
  std::uint64_t period_ = 1;
  std::uint64_t episode_ = 0;
};

// min(1, mean + scale * sqrt(2 ln t / count)); 1 when count is 0.
double ucb_value(double mean, std::uint64_t count, double log_t, double scale);

// Optimistic demand for the current period.
DemandTable ucb_demand_table(const LearnerState& state, double ucb_scale);

// Largest resolution the learner will request (grid spacing 1e-4).
inline constexpr std::size_t kDefaultResolutionCap = 10'000;

struct WatchedCounter {
  CounterCell cell;
  std::uint64_t start_value = 0;
};

struct EpisodeSnapshot {
  std::uint64_t episode = 0;
  std::uint64_t start_period = 0;
  std::size_t resolution = 0;
  bool resolution_capped = false;
  Policy policy;
  std::vector<WatchedCounter> watched;
};

// Counter cells addressed by a policy: every primary cell, plus the active
// add-on cell of each supportive product.
std::vector<CounterCell> policy_counters(const Policy& policy);

// Starts a new episode: K = ceil(sqrt(t) / epsilon) (capped), FPTAS on the
// optimistic instance, and a snapshot of the counters the policy touches.
EpisodeSnapshot begin_episode(LearnerState& state, double epsilon, double ucb_scale,
                              std::size_t resolution_cap = kDefaultResolutionCap);

// Folds one period into the counters and advances the period. Returns true
// when a watched counter has at least doubled since the episode began (a
// start value of 0 counts as doubled at 1).
bool record_observation(LearnerState& state, const EpisodeSnapshot& snapshot,
                        const PeriodObservation& obs);

struct LearningConfig {
  std::uint64_t horizon = 1;
  double epsilon = 0.1;
  double ucb_scale = 1.0;
  std::uint64_t seed = 0;
  std::size_t resolution_cap = kDefaultResolutionCap;
};

struct TrajectoryPoint {
  std::uint64_t period = 0;
  std::uint64_t episode = 0;  // identifies the policy in force
  double expected_revenue = 0.0;
  double realized_revenue = 0.0;
};

struct LearningRun {
  std::uint64_t seed = 0;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<std::uint64_t> episode_starts;
  std::size_t max_resolution = 0;
  bool resolution_capped = false;
};

// Runs the episodic UCB learner against simulated demand. Expected revenue
// is the exact revenue of the policy in force under the ground truth.
LearningRun run_learning(const Instance& ground_truth, const LearningConfig& config);

}  // namespace addon
