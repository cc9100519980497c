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

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "addon/errors.hpp"
#include "addon/fptas.hpp"
#include "addon/oracle.hpp"
#include "support/random_instance.hpp"

namespace addon {
namespace {

Instance one_by_one(double alpha_core, double core_price) {
  Instance inst;
  inst.n_core = 1;
  inst.n_supportive = 0;
  inst.grid = {{core_price}, {10}, {5}};
  inst.demand.alpha_core = ProbTable(1, 1, alpha_core);
  inst.demand.alpha_supportive = ProbTable(0, 1);
  inst.demand.beta_addon_discount = ProbTable(0, 1);
  inst.demand.beta_addon_original = ProbTable(0, 1);
  return inst;
}

TEST(SubproblemGrid, GammaZeroOnBundledScenario) {
  const Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  const auto grid = solve_subproblem_grid(inst, 10);
  ASSERT_EQ(grid.size(), 31u);
  // Sum over games of max_p alpha(p) p, enumerated independently.
  EXPECT_NEAR(grid.values[0], 106.955, 1e-9);
  // Game 1 peaks at p = 100 (index 1) with revenue 4.12; no flags at gamma 0.
  EXPECT_EQ(grid.decisions[0][0].price, 1u);
  for (const auto& c : grid.decisions[0]) EXPECT_FALSE(c.flagged());
}

TEST(SubproblemGrid, ZeroBudgetNeverFlags) {
  const Instance inst = bundled_scenario(EffectLevel::kHigh, 0);
  const auto grid = solve_subproblem_grid(inst, 7);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double plain = 0.0;
    for (std::size_t m = 0; m < inst.n_supportive; ++m) {
      EXPECT_FALSE(grid.decisions[i][m].flagged());
      double best = -1.0;
      for (std::size_t c = 0; c < inst.grid.supportive.size(); ++c) {
        const double p = inst.grid.supportive[c];
        best = std::max(best, inst.demand.alpha_supportive(m, c) * p +
                                  grid.gamma(i) * inst.demand.beta_addon_original(m, c) * p);
      }
      plain += best;
    }
    EXPECT_NEAR(grid.values[i], plain, 1e-9);
  }
}

TEST(SubproblemGrid, SingleProductPicksBestFeasibleDiscount) {
  Instance inst;
  inst.n_core = 1;
  inst.n_supportive = 1;
  inst.space_limit = 1;
  inst.grid = {{100}, {50, 90}, {40, 60, 95}};
  inst.demand.alpha_core = ProbTable(1, 1, 1.0);
  inst.demand.alpha_supportive = ProbTable(1, 2, 0.0);
  inst.demand.beta_addon_original = ProbTable(1, 2, 1.0);
  inst.demand.beta_addon_discount = ProbTable(1, 3);
  inst.demand.beta_addon_discount(0, 0) = 1.0;  // 40
  inst.demand.beta_addon_discount(0, 1) = 1.0;  // 60
  inst.demand.beta_addon_discount(0, 2) = 1.0;  // 95 is never below any price
  // With beta = 1 no discount could ever win (beta' p' <= p' < p), so the
  // original option is weakened to 0.2 p.
  inst.demand.beta_addon_original(0, 0) = 0.2;
  inst.demand.beta_addon_original(0, 1) = 0.2;

  // Brute force over (p, p') with p' < p at gamma = 1.
  double best = -1.0;
  std::size_t best_p = 0, best_a = 0;
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t a = 0; a < 3; ++a) {
      if (!(inst.grid.addon[a] < inst.grid.supportive[c])) continue;
      const double v = inst.demand.beta_addon_discount(0, a) * inst.grid.addon[a];
      if (v > best) {
        best = v;
        best_p = c;
        best_a = a;
      }
    }
  }
  const auto grid = solve_subproblem_grid(inst, 1);
  const auto& choice = grid.decisions[1][0];
  ASSERT_TRUE(choice.flagged());
  EXPECT_EQ(choice.price, best_p);
  EXPECT_EQ(*choice.discount, best_a);
  EXPECT_DOUBLE_EQ(grid.values[1], best);
}

TEST(SubproblemGrid, EmptyDiscountSetIsNeverFlagged) {
  Instance inst = bundled_scenario(EffectLevel::kHigh, 20);
  inst.grid.addon = {500, 600, 700, 800};  // above every supportive price
  const auto grid = solve_subproblem_grid(inst, 5);
  for (const auto& decision : grid.decisions) {
    for (const auto& c : decision) EXPECT_FALSE(c.flagged());
  }
}

TEST(SubproblemGrid, GreedyTieBreaksToLowerIndex) {
  Instance inst;
  inst.n_core = 1;
  inst.n_supportive = 3;
  inst.space_limit = 1;
  inst.grid = {{100}, {50}, {40}};
  inst.demand.alpha_core = ProbTable(1, 1, 1.0);
  inst.demand.alpha_supportive = ProbTable(3, 1, 0.0);
  inst.demand.beta_addon_original = ProbTable(3, 1, 0.1);
  inst.demand.beta_addon_discount = ProbTable(3, 1, 0.5);
  const auto grid = solve_subproblem_grid(inst, 1);
  EXPECT_TRUE(grid.decisions[1][0].flagged());
  EXPECT_FALSE(grid.decisions[1][1].flagged());
  EXPECT_FALSE(grid.decisions[1][2].flagged());
}

TEST(SubproblemGrid, ZeroGainIsNotSelected) {
  Instance inst;
  inst.n_core = 1;
  inst.n_supportive = 1;
  inst.space_limit = 1;
  inst.grid = {{100}, {50}, {40}};
  inst.demand.alpha_core = ProbTable(1, 1, 1.0);
  inst.demand.alpha_supportive = ProbTable(1, 1, 0.0);
  inst.demand.beta_addon_original = ProbTable(1, 1, 0.4);   // 20
  inst.demand.beta_addon_discount = ProbTable(1, 1, 0.5);   // 20
  const auto grid = solve_subproblem_grid(inst, 1);
  EXPECT_FALSE(grid.decisions[1][0].flagged());
}

TEST(SubproblemGrid, RejectsZeroResolution) {
  EXPECT_THROW(solve_subproblem_grid(bundled_scenario(EffectLevel::kLow, 4), 0), ConfigError);
}

TEST(MasterDp, OneCoreOneAction) {
  const Instance inst = one_by_one(0.5, 300);
  const auto res = fptas_solve(inst, 2);
  EXPECT_DOUBLE_EQ(res.approx_revenue, 150.0);
  EXPECT_EQ(res.policy.core_prices, std::vector<std::size_t>{0});
  EXPECT_EQ(res.terminal_gamma, 1u);
}

TEST(MasterDp, ZeroCoreDemandEndsAtGammaZero) {
  Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  inst.demand.alpha_core = ProbTable(3, 4, 0.0);
  const auto grid = solve_subproblem_grid(inst, 20);
  const auto res = solve_master_dp(inst, grid);
  EXPECT_EQ(res.terminal_gamma, 0u);
  EXPECT_DOUBLE_EQ(res.approx_revenue, grid.values[0]);
}

TEST(MasterDp, RoundsHalfAwayFromZero) {
  // alpha = 0.25, K = 2: 0.5 grid steps round to 1.
  const Instance inst = one_by_one(0.25, 100);
  EXPECT_EQ(fptas_solve(inst, 2).terminal_gamma, 1u);
  // alpha = 0.2, K = 2: 0.4 rounds to 0.
  EXPECT_EQ(fptas_solve(one_by_one(0.2, 100), 2).terminal_gamma, 0u);
}

TEST(MasterDp, RejectsMismatchedGrid) {
  const Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  auto grid = solve_subproblem_grid(inst, 4);
  grid.values.pop_back();
  EXPECT_THROW(solve_master_dp(inst, grid), ConfigError);
}

TEST(FptasSolve, SingletonGridsGiveTheUniquePolicy) {
  Instance inst;
  inst.n_core = 1;
  inst.n_supportive = 1;
  inst.space_limit = 1;
  // The discount price is not below the original one, so no add-on is
  // feasible and exactly one policy exists.
  inst.grid = {{300}, {60}, {70}};
  inst.demand.alpha_core = ProbTable(1, 1, 0.4);
  inst.demand.alpha_supportive = ProbTable(1, 1, 0.2);
  inst.demand.beta_addon_original = ProbTable(1, 1, 0.1);
  inst.demand.beta_addon_discount = ProbTable(1, 1, 0.9);
  const auto oracle = brute_force_solve(inst);
  for (std::size_t k : {1, 3, 10, 1000}) {
    const auto res = fptas_solve(inst, k);
    EXPECT_EQ(res.policy, oracle.policy) << "K=" << k;
  }
}

TEST(FptasSolve, BundledWithinBoundOfOracle) {
  const Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  const auto oracle = brute_force_solve(inst);
  const std::size_t k = 2000;
  const auto res = fptas_solve(inst, k);
  const double bound = fptas_error_bound(inst, k);
  EXPECT_DOUBLE_EQ(bound, 800.0 * 20 * 3 / 2000);
  EXPECT_LE(oracle.optimum - exact_policy_revenue(inst, res.policy), bound);
  EXPECT_LE(std::abs(res.approx_revenue - oracle.optimum), bound);
}

TEST(FptasSolve, RandomInstancesWithinBoundAndFeasible) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng);
    const auto oracle = brute_force_solve(inst);
    const std::size_t k = 1000;
    const auto res = fptas_solve(inst, k);
    ASSERT_TRUE(is_valid_policy(inst, res.policy));
    const double truth = exact_policy_revenue(inst, res.policy);
    const double bound = fptas_error_bound(inst, k);
    EXPECT_LE(oracle.optimum - truth, bound + 1e-9) << "trial " << trial;
    EXPECT_LE(std::abs(res.approx_revenue - truth), bound / 2 + 1e-9) << "trial " << trial;
  }
}

TEST(SubproblemGrid, LipschitzConvexMonotone) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng);
    const auto grid = solve_subproblem_grid(inst, 25);
    const double lip = static_cast<double>(inst.n_supportive) * inst.grid.max_price();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_GE(grid.values[i], 0.0);
      for (const auto& choice : grid.decisions[i]) {
        if (choice.discount) {
          EXPECT_LT(inst.grid.addon[*choice.discount], inst.grid.supportive[choice.price]);
        }
      }
      if (i > 0) EXPECT_GE(grid.values[i], grid.values[i - 1] - 1e-12);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_LE(std::abs(grid.values[i] - grid.values[j]),
                  lip * (grid.gamma(i) - grid.gamma(j)) + 1e-9);
      }
      if (i >= 2) {
        const double left = grid.values[i - 1] - grid.values[i - 2];
        const double right = grid.values[i] - grid.values[i - 1];
        EXPECT_GE(right, left - 1e-9);
      }
    }
  }
}

TEST(Resolution, ForEpsilon) {
  const Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  EXPECT_EQ(resolution_for_epsilon(inst, 0.1, 100.0), 4800u);
  EXPECT_EQ(resolution_for_epsilon(inst, 0.5, 48000.0), 2u);
  EXPECT_EQ(resolution_for_epsilon(inst, 1.0 - 1e-13, 48000.0), 1u);
  EXPECT_THROW(resolution_for_epsilon(inst, 0.0, 100.0), ConfigError);
  EXPECT_THROW(resolution_for_epsilon(inst, 1.0, 100.0), ConfigError);
  EXPECT_THROW(resolution_for_epsilon(inst, 0.1, 0.0), ConfigError);
}

TEST(Resolution, EpsilonChoiceGivesRelativeAccuracy) {
  const Instance inst = bundled_scenario(EffectLevel::kHigh, 8);
  const auto oracle = brute_force_solve(inst);
  const double vstar = 0.9 * oracle.optimum;
  for (double eps : {0.5, 0.2, 0.1}) {
    const std::size_t k = resolution_for_epsilon(inst, eps, vstar);
    const auto res = fptas_solve(inst, k);
    EXPECT_GE(exact_policy_revenue(inst, res.policy), (1.0 - eps) * oracle.optimum);
  }
}

TEST(FptasSolve, Deterministic) {
  const Instance inst = bundled_scenario(EffectLevel::kLow, 4);
  const auto a = fptas_solve(inst, 333);
  const auto b = fptas_solve(inst, 333);
  EXPECT_EQ(a.policy, b.policy);
  EXPECT_EQ(a.approx_revenue, b.approx_revenue);
}

}  // namespace
}  // namespace addon
