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

#include "addon/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "addon/errors.hpp"
#include "addon/fptas.hpp"
#include "addon/oracle.hpp"
#include "addon/rng.hpp"

#ifndef ADDON_VERSION
#define ADDON_VERSION "0.0.0"
#endif

namespace addon {
namespace {

constexpr double kFallbackEpsilon = 1e-3;
constexpr std::size_t kFallbackResolutionCap = 100'000;
constexpr std::size_t kCoarseResolution = 100;

}  // namespace

std::string to_string(RStarMethod method) {
  return method == RStarMethod::kOracle ? "oracle" : "fptas-with-bound";
}

std::string library_version() { return ADDON_VERSION; }

Benchmark compute_benchmark(const Instance& inst, std::size_t enumeration_cap) {
  inst.validate();
  Benchmark out;
  if (core_vector_count(inst) <= enumeration_cap) {
    auto exact = brute_force_solve(inst, enumeration_cap);
    out.r_star = exact.optimum;
    out.policy = std::move(exact.policy);
    return out;
  }

  out.method = RStarMethod::kFptasWithBound;
  const auto coarse = fptas_solve(inst, kCoarseResolution);
  const double lower = exact_policy_revenue(inst, coarse.policy);
  out.r_star = lower;
  out.policy = coarse.policy;
  out.bound = fptas_error_bound(inst, kCoarseResolution);
  if (lower > 0.0) {
    const std::size_t k =
        std::min(resolution_for_epsilon(inst, kFallbackEpsilon, lower), kFallbackResolutionCap);
    const auto fine = fptas_solve(inst, k);
    const double value = exact_policy_revenue(inst, fine.policy);
    if (value >= out.r_star) {
      out.r_star = value;
      out.policy = fine.policy;
    }
    out.bound = fptas_error_bound(inst, k);
  }
  return out;
}

double cumulative_regret(std::span<const TrajectoryPoint> trajectory, double r_star,
                         std::uint64_t horizon) {
  double total = 0.0;
  for (const auto& pt : trajectory) {
    if (pt.period > horizon) break;
    total += r_star - pt.expected_revenue;
  }
  return total;
}

double regret_fraction(std::span<const TrajectoryPoint> trajectory, double r_star,
                       std::uint64_t horizon) {
  if (!(r_star > 0.0)) throw ConfigError("R* must be positive");
  if (trajectory.empty() || horizon < 1) throw ConfigError("empty trajectory");
  double earned = 0.0;
  for (const auto& pt : trajectory) {
    if (pt.period > horizon) break;
    earned += pt.expected_revenue;
  }
  return 1.0 - earned / (r_star * static_cast<double>(horizon));
}

RegretReport compute_regret_percentage(std::span<const LearningRun> runs, double r_star,
                                       std::span<const std::uint64_t> checkpoints,
                                       RStarMethod method) {
  if (!(r_star > 0.0)) throw ConfigError("R* must be positive");
  if (runs.empty()) throw ConfigError("no learning runs to report");
  std::size_t length = runs.front().trajectory.size();
  for (const auto& run : runs) {
    if (run.trajectory.empty()) throw ConfigError("empty trajectory");
    length = std::min(length, run.trajectory.size());
  }

  RegretReport report;
  report.r_star = r_star;
  report.r_star_method = method;
  const double count = static_cast<double>(runs.size());
  for (std::uint64_t cp : checkpoints) {
    if (cp < 1 || cp > length) continue;
    std::vector<double> values;
    values.reserve(runs.size());
    for (const auto& run : runs) values.push_back(100.0 * regret_fraction(run.trajectory, r_star, cp));
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / count;
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double se = runs.size() > 1 ? std::sqrt(var / (count - 1.0) / count) : 0.0;
    report.checkpoints.push_back({cp, mean, se});
  }
  for (const auto& run : runs) {
    report.per_seed_final.push_back(cumulative_regret(run.trajectory, r_star, length));
  }
  return report;
}

GapResult optimality_gap(const Instance& inst) {
  GapResult out;
  const Benchmark with_addon = compute_benchmark(inst);
  out.r_star = with_addon.r_star;
  out.method = with_addon.method;
  if (inst.space_limit == 0) {
    out.r_star_no_addon = out.r_star;
    out.gap_percent = 0.0;
    return out;
  }
  const Benchmark without = compute_benchmark(inst.with_space_limit(0));
  out.r_star_no_addon = without.r_star;
  if (without.method != RStarMethod::kOracle) out.method = without.method;
  if (out.r_star_no_addon > 0.0) {
    out.gap_percent = 100.0 * (out.r_star / out.r_star_no_addon - 1.0);
  }
  return out;
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t index) {
  return DrawStream(base_seed).split(index).key();
}

std::vector<LearningRun> run_replications(const Instance& gt, LearningConfig config,
                                          std::size_t replications, std::uint64_t base_seed,
                                          std::size_t threads) {
  if (replications < 1) throw ConfigError("replications must be at least 1");
  gt.validate();
  std::vector<LearningRun> runs(replications);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, replications);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < replications; i = next++) {
      LearningConfig local = config;
      local.seed = replication_seed(base_seed, i);
      runs[i] = run_learning(gt, local);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return runs;
}

std::optional<std::uint64_t> beat_period(std::span<const LearningRun> runs, double threshold,
                                         std::uint64_t window) {
  if (runs.empty() || window < 1) return std::nullopt;
  std::size_t length = runs.front().trajectory.size();
  for (const auto& run : runs) length = std::min(length, run.trajectory.size());

  std::vector<double> mean(length, 0.0);
  for (const auto& run : runs) {
    for (std::size_t t = 0; t < length; ++t) mean[t] += run.trajectory[t].expected_revenue;
  }
  for (double& v : mean) v /= static_cast<double>(runs.size());

  double window_sum = 0.0;
  for (std::size_t t = 0; t < length; ++t) {
    window_sum += mean[t];
    if (t >= window) window_sum -= mean[t - window];
    const double span = static_cast<double>(std::min<std::uint64_t>(t + 1, window));
    if (window_sum / span > threshold) return t + 1;
  }
  return std::nullopt;
}

std::vector<Table1Row> run_table1_suite(const Table1Options& opt) {
  std::vector<Table1Row> rows;
  for (EffectLevel effect : opt.effects) {
    for (std::size_t s : opt.space_limits) {
      const Instance inst = bundled_scenario(effect, s);
      const GapResult gap = optimality_gap(inst);

      Table1Row row;
      row.effect = effect;
      row.space_limit = s;
      row.gap_percent = gap.gap_percent;

      LearningConfig cfg;
      cfg.horizon = opt.horizon;
      cfg.epsilon = opt.epsilon;
      cfg.ucb_scale = opt.ucb_scale;
      const auto runs = run_replications(inst, cfg, opt.replications, opt.base_seed, opt.threads);
      if (gap.r_star > 0.0) {
        const auto report =
            compute_regret_percentage(runs, gap.r_star, kTable1Checkpoints, gap.method);
        for (std::uint64_t cp : kTable1Checkpoints) {
          auto it = std::find_if(report.checkpoints.begin(), report.checkpoints.end(),
                                 [&](const RegretCheckpoint& c) { return c.period == cp; });
          row.regret_percent.push_back(it == report.checkpoints.end()
                                           ? std::nullopt
                                           : std::optional<double>(it->mean_percent));
        }
      } else {
        row.regret_percent.assign(std::size(kTable1Checkpoints), std::nullopt);
      }
      row.beat_period = beat_period(runs, gap.r_star_no_addon);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_learning_csv(std::ostream& out, std::span<const LearningRun> runs, double r_star) {
  out << "period,seed,episode,expected_revenue,realized_revenue,cumulative_regret\n";
  for (const auto& run : runs) {
    double regret = 0.0;
    for (const auto& pt : run.trajectory) {
      regret += r_star - pt.expected_revenue;
      out << fmt::format("{},{},{},{:.6f},{:.6f},{:.6f}\n", pt.period, run.seed, pt.episode,
                         pt.expected_revenue, pt.realized_revenue, regret);
    }
  }
}

void write_table1_csv(std::ostream& out, std::span<const Table1Row> rows) {
  out << "effect,S,regret_1w,regret_1m,regret_3m,regret_1y,gap_pct,beat_period\n";
  for (const auto& row : rows) {
    out << to_string(row.effect) << ',' << row.space_limit;
    for (const auto& r : row.regret_percent) {
      out << ',' << (r ? fmt::format("{:.4f}", *r) : std::string{});
    }
    out << ',' << fmt::format("{:.4f}", row.gap_percent) << ','
        << (row.beat_period ? std::to_string(*row.beat_period) : std::string{}) << '\n';
  }
}

void write_meta_sidecar(const std::string& output, const nlohmann::json& meta) {
  const auto path = std::filesystem::path(output).replace_extension(".meta");
  std::ofstream out(path);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  out << meta.dump(2) << '\n';
}

}  // namespace addon
