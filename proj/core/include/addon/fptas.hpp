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
#include <vector>

#include "addon/demand.hpp"
#include "addon/policy.hpp"

namespace addon {

// Optimal supportive-side revenue R_s on the grid gamma = i/K, i = 0..N*K,
// together with the supportive decision attaining it at each point.
struct SubproblemGrid {
  std::size_t resolution = 0;  // K
  std::size_t n_core = 0;      // N, the grid spans [0, N]
  std::vector<double> values;  // R_s(i/K)
  std::vector<std::vector<SupportiveChoice>> decisions;

  std::size_t size() const { return values.size(); }
  double gamma(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(resolution);
  }
};

// Part 1: per-product maxima with and without a discount, then the at most S
// strictly positive gains are taken (ties to the lower product index).
SubproblemGrid solve_subproblem_grid(const Instance& instance, std::size_t resolution);

struct FptasResult {
  Policy policy;
  double approx_revenue = 0.0;  // V_1(0)
  std::size_t terminal_gamma = 0;  // grid index reached by the core prices
};

// Part 2: backward induction over (product, rounded core demand). Rewards use
// exact alpha; transitions use alpha rounded to the nearest multiple of 1/K.
FptasResult solve_master_dp(const Instance& instance, const SubproblemGrid& subgrid);

FptasResult fptas_solve(const Instance& instance, std::size_t resolution);

// K = ceil(p-hat * M * N / (v* * epsilon)), at least 1.
std::size_t resolution_for_epsilon(const Instance& instance, double epsilon,
                                   double revenue_lower_bound);

// Absolute error bound p-hat * M * N / K of a solve at resolution K.
double fptas_error_bound(const Instance& instance, std::size_t resolution);

// Ceiling that ignores relative round-off of a few ulps, so that 10 / 0.1
// yields 100 rather than 101.
std::size_t ceil_to_size(double x);

}  // namespace addon
