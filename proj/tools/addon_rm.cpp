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

// Command line front end: offline solves, learning runs and the
// effect-level by space-limit experiment grid.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "addon/demand.hpp"
#include "addon/errors.hpp"
#include "addon/fptas.hpp"
#include "addon/harness.hpp"
#include "addon/learner.hpp"
#include "addon/oracle.hpp"

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr char kDefaultScenario[] = "bundled:medium:6";

struct SolveArgs {
  std::string scenario = kDefaultScenario;
  double epsilon = 0.1;
  std::size_t k = 0;
  double vstar = 0.0;
};

struct OracleArgs {
  std::string scenario = kDefaultScenario;
  std::size_t cap = addon::kDefaultEnumerationCap;
};

struct LearnArgs {
  std::string scenario = kDefaultScenario;
  std::uint64_t horizon = 8760;
  std::size_t seeds = 1;
  std::uint64_t base_seed = 0;
  double epsilon = 0.1;
  double ucb_scale = 1.0;
  std::size_t threads = 0;
  std::string out;
};

struct Table1Args {
  std::vector<std::string> effects{"low", "medium", "high"};
  std::vector<std::size_t> space_limits{4, 6, 8};
  std::size_t seeds = 100;
  std::uint64_t base_seed = 0;
  std::uint64_t horizon = 8760;
  double epsilon = 0.1;
  double ucb_scale = 0.125;
  std::size_t threads = 0;
  std::string out;
};

void check_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw addon::ConfigError("--epsilon must lie in (0,1)");
}

int run_solve(const SolveArgs& a) {
  const addon::Instance inst = addon::resolve_scenario(a.scenario);
  std::size_t k = a.k;
  double vstar = a.vstar;
  if (k == 0) {
    check_epsilon(a.epsilon);
    if (vstar <= 0.0) {
      // Any feasible policy's revenue is a valid lower bound.
      vstar = addon::exact_policy_revenue(inst, addon::fptas_solve(inst, 100).policy);
    }
    k = addon::resolution_for_epsilon(inst, a.epsilon, vstar);
  }
  const auto result = addon::fptas_solve(inst, k);
  nlohmann::json out = {
      {"resolution", k},
      {"approx_revenue", result.approx_revenue},
      {"exact_revenue", addon::exact_policy_revenue(inst, result.policy)},
      {"error_bound", addon::fptas_error_bound(inst, k)},
      {"policy", addon::policy_to_json(inst, result.policy)},
  };
  if (vstar > 0.0) out["revenue_lower_bound"] = vstar;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_oracle(const OracleArgs& a) {
  const addon::Instance inst = addon::resolve_scenario(a.scenario);
  const auto result = addon::brute_force_solve(inst, a.cap);
  const nlohmann::json out = {
      {"optimum", result.optimum},
      {"enumerated", result.enumerated},
      {"policy", addon::policy_to_json(inst, result.policy)},
  };
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_learn(const LearnArgs& a) {
  check_epsilon(a.epsilon);
  if (a.horizon < 1) throw addon::ConfigError("--horizon must be at least 1");
  if (a.seeds < 1) throw addon::ConfigError("--seeds must be at least 1");
  if (!(a.ucb_scale > 0.0)) throw addon::ConfigError("--ucb-scale must be positive");

  const addon::Instance inst = addon::resolve_scenario(a.scenario);
  const addon::Benchmark bench = addon::compute_benchmark(inst);

  addon::LearningConfig cfg;
  cfg.horizon = a.horizon;
  cfg.epsilon = a.epsilon;
  cfg.ucb_scale = a.ucb_scale;
  const auto runs = addon::run_replications(inst, cfg, a.seeds, a.base_seed, a.threads);

  if (a.out.empty()) {
    addon::write_learning_csv(std::cout, runs, bench.r_star);
  } else {
    std::ofstream csv(a.out);
    if (!csv) throw addon::ConfigError(fmt::format("cannot write '{}'", a.out));
    addon::write_learning_csv(csv, runs, bench.r_star);

    std::size_t max_k = 0;
    bool capped = false;
    for (const auto& run : runs) {
      max_k = std::max(max_k, run.max_resolution);
      capped = capped || run.resolution_capped;
    }
    addon::write_meta_sidecar(
        a.out, {{"command", "learn"},
                {"version", addon::library_version()},
                {"scenario", a.scenario},
                {"horizon", a.horizon},
                {"seeds", a.seeds},
                {"base_seed", a.base_seed},
                {"epsilon", a.epsilon},
                {"ucb_scale", a.ucb_scale},
                {"r_star", bench.r_star},
                {"r_star_method", addon::to_string(bench.method)},
                {"r_star_bound", bench.bound},
                {"resolution_cap", cfg.resolution_cap},
                {"resolution_cap_applied", capped},
                {"max_resolution", max_k}});
  }

  if (bench.r_star > 0.0) {
    const auto report = addon::compute_regret_percentage(runs, bench.r_star,
                                                         addon::kTable1Checkpoints, bench.method);
    for (const auto& cp : report.checkpoints) {
      std::cerr << fmt::format("regret% at T={}: {:.3f} (se {:.3f})\n", cp.period,
                               cp.mean_percent, cp.std_error);
    }
  }
  return 0;
}

int run_gap(const std::string& scenario) {
  const addon::Instance inst = addon::resolve_scenario(scenario);
  const auto gap = addon::optimality_gap(inst);
  const nlohmann::json out = {{"r_star", gap.r_star},
                              {"r_star_no_addon", gap.r_star_no_addon},
                              {"gap_percent", gap.gap_percent},
                              {"method", addon::to_string(gap.method)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_table1(const Table1Args& a) {
  check_epsilon(a.epsilon);
  if (a.seeds < 1) throw addon::ConfigError("--seeds must be at least 1");
  if (a.horizon < 1) throw addon::ConfigError("--horizon must be at least 1");
  addon::Table1Options opt;
  opt.effects.clear();
  for (const auto& e : a.effects) opt.effects.push_back(addon::parse_effect_level(e));
  opt.space_limits = a.space_limits;
  opt.replications = a.seeds;
  opt.base_seed = a.base_seed;
  opt.horizon = a.horizon;
  opt.epsilon = a.epsilon;
  opt.ucb_scale = a.ucb_scale;
  opt.threads = a.threads;
  const auto rows = addon::run_table1_suite(opt);

  if (a.out.empty()) {
    addon::write_table1_csv(std::cout, rows);
    return 0;
  }
  std::ofstream csv(a.out);
  if (!csv) throw addon::ConfigError(fmt::format("cannot write '{}'", a.out));
  addon::write_table1_csv(csv, rows);
  addon::write_meta_sidecar(a.out, {{"command", "table1"},
                                    {"version", addon::library_version()},
                                    {"effects", a.effects},
                                    {"space_limits", a.space_limits},
                                    {"seeds", a.seeds},
                                    {"base_seed", a.base_seed},
                                    {"horizon", a.horizon},
                                    {"epsilon", a.epsilon},
                                    {"ucb_scale", a.ucb_scale},
                                    {"resolution_cap", addon::kDefaultResolutionCap}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Add-on discount pricing: FPTAS, exact oracle and UCB learner"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate offline solve with the FPTAS");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario file or bundled:<effect>:<S>");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Target relative accuracy");
  solve_cmd->add_option("--k", solve.k, "Grid resolution K (overrides --epsilon)");
  solve_cmd->add_option("--vstar", solve.vstar, "Lower bound on the optimal revenue");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact solve by core price enumeration");
  oracle_cmd->add_option("--scenario", oracle.scenario, "Scenario file or bundled:<effect>:<S>");
  oracle_cmd->add_option("--cap", oracle.cap, "Maximum number of core price vectors");

  LearnArgs learn;
  auto* learn_cmd = app.add_subcommand("learn", "Run the UCB learner over seeds");
  learn_cmd->add_option("--scenario", learn.scenario, "Scenario file or bundled:<effect>:<S>");
  learn_cmd->add_option("--horizon", learn.horizon, "Periods per run");
  learn_cmd->add_option("--seeds", learn.seeds, "Number of replications");
  learn_cmd->add_option("--base-seed", learn.base_seed, "Seed the replications are split from");
  learn_cmd->add_option("--epsilon", learn.epsilon, "FPTAS accuracy inside the learner");
  learn_cmd->add_option("--ucb-scale", learn.ucb_scale, "Multiplier on the confidence radius");
  learn_cmd->add_option("--threads", learn.threads, "Worker threads (0 = all cores)");
  learn_cmd->add_option("--out", learn.out, "CSV output path (stdout if omitted)");

  std::string gap_scenario = kDefaultScenario;
  auto* gap_cmd = app.add_subcommand("gap", "Revenue gain of add-on discounts over S = 0");
  gap_cmd->add_option("--scenario", gap_scenario, "Scenario file or bundled:<effect>:<S>");

  Table1Args table1;
  auto* table1_cmd = app.add_subcommand("table1", "Regret and gap grid on the bundled scenario");
  table1_cmd->add_option("--effects", table1.effects, "Effect levels")->delimiter(',');
  table1_cmd->add_option("--space-limits", table1.space_limits, "Space limits")->delimiter(',');
  table1_cmd->add_option("--seeds", table1.seeds, "Replications per cell");
  table1_cmd->add_option("--base-seed", table1.base_seed, "Seed the replications are split from");
  table1_cmd->add_option("--horizon", table1.horizon, "Periods per run");
  table1_cmd->add_option("--epsilon", table1.epsilon, "FPTAS accuracy inside the learner");
  table1_cmd->add_option("--ucb-scale", table1.ucb_scale, "Multiplier on the confidence radius");
  table1_cmd->add_option("--threads", table1.threads, "Worker threads (0 = all cores)");
  table1_cmd->add_option("--out", table1.out, "CSV output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*oracle_cmd) return run_oracle(oracle);
    if (*learn_cmd) return run_learn(learn);
    if (*gap_cmd) return run_gap(gap_scenario);
    if (*table1_cmd) return run_table1(table1);
  } catch (const addon::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const addon::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitInvalidConfig;
}
