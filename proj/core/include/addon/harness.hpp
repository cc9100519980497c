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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "addon/demand.hpp"
#include "addon/learner.hpp"
#include "addon/policy.hpp"

namespace addon {

// Week, month, three months and one year of hourly periods.
inline constexpr std::uint64_t kTable1Checkpoints[] = {168, 672, 2016, 8760};
inline constexpr std::uint64_t kBeatWindow = 168;

enum class RStarMethod { kOracle, kFptasWithBound };
std::string to_string(RStarMethod method);

// Clairvoyant per-period revenue R*. Exact when the core enumeration fits
// the cap; otherwise the exact revenue of an FPTAS policy with eps = 1e-3,
// which lies within `bound` of the optimum.
struct Benchmark {
  double r_star = 0.0;
  RStarMethod method = RStarMethod::kOracle;
  double bound = 0.0;
  Policy policy;
};
Benchmark compute_benchmark(const Instance& instance,
                            std::size_t enumeration_cap = 1'000'000);

struct RegretCheckpoint {
  std::uint64_t period = 0;
  double mean_percent = 0.0;
  double std_error = 0.0;
};

struct RegretReport {
  std::vector<RegretCheckpoint> checkpoints;
  std::vector<double> per_seed_final;  // cumulative regret at the horizon
  double r_star = 0.0;
  RStarMethod r_star_method = RStarMethod::kOracle;
};

// 1 - sum_{t<=T} R(Pi_t) / (R* T), as a fraction.
double regret_fraction(std::span<const TrajectoryPoint> trajectory, double r_star,
                       std::uint64_t horizon);
double cumulative_regret(std::span<const TrajectoryPoint> trajectory, double r_star,
                         std::uint64_t horizon);

// Seed-averaged regret percentages at each checkpoint not beyond the runs'
// length. Throws ConfigError for r_star <= 0 or empty input.
RegretReport compute_regret_percentage(std::span<const LearningRun> runs, double r_star,
                                       std::span<const std::uint64_t> checkpoints,
                                       RStarMethod method = RStarMethod::kOracle);

struct GapResult {
  double r_star = 0.0;
  double r_star_no_addon = 0.0;
  double gap_percent = 0.0;  // 100 * (R* / R*_0 - 1)
  RStarMethod method = RStarMethod::kOracle;
};
GapResult optimality_gap(const Instance& instance);

// Seed of replication `index`, split from the base seed's stream.
std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t index);

// Independent learner runs, evaluated on worker threads. Results are ordered
// by replication index regardless of scheduling.
std::vector<LearningRun> run_replications(const Instance& ground_truth, LearningConfig config,
                                          std::size_t replications, std::uint64_t base_seed,
                                          std::size_t threads = 0);

// First period at which the trailing mean (over `window` periods, fewer at
// the start) of seed-averaged expected revenue exceeds `threshold`.
std::optional<std::uint64_t> beat_period(std::span<const LearningRun> runs, double threshold,
                                         std::uint64_t window = kBeatWindow);

struct Table1Row {
  EffectLevel effect = EffectLevel::kMedium;
  std::size_t space_limit = 0;
  std::vector<std::optional<double>> regret_percent;  // per checkpoint
  double gap_percent = 0.0;
  std::optional<std::uint64_t> beat_period;
};

struct Table1Options {
  std::vector<EffectLevel> effects{EffectLevel::kLow, EffectLevel::kMedium, EffectLevel::kHigh};
  std::vector<std::size_t> space_limits{4, 6, 8};
  std::size_t replications = 100;
  std::uint64_t base_seed = 0;
  std::uint64_t horizon = 8760;
  double epsilon = 0.1;
  double ucb_scale = 0.125;
  std::size_t threads = 0;
};
std::vector<Table1Row> run_table1_suite(const Table1Options& options);

// CSV: period,seed,episode,expected_revenue,realized_revenue,cumulative_regret
void write_learning_csv(std::ostream& out, std::span<const LearningRun> runs, double r_star);
// CSV: effect,S,regret_1w,regret_1m,regret_3m,regret_1y,gap_pct,beat_period
void write_table1_csv(std::ostream& out, std::span<const Table1Row> rows);

// Writes `meta` as JSON next to `output`, extension replaced by ".meta".
void write_meta_sidecar(const std::string& output, const nlohmann::json& meta);

std::string library_version();

}  // namespace addon
