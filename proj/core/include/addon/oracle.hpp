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

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Per-period expected revenue of a policy under the instance's demand:
//   sum_n alpha_n p_n + sum_m alpha_m p_m
//     + (sum_n alpha_n) * sum_m [I_m beta'_m p'_m + (1 - I_m) beta_m p_m].
// Throws InfeasibleError if the policy is not valid for the instance.
double exact_policy_revenue(const Instance& instance, const Policy& policy);

// Exact supportive-side optimum for a known core demand gamma, written
// independently of the FPTAS grid code.
struct SupportiveSolution {
  std::vector<SupportiveChoice> choices;
  double revenue = 0.0;
};
SupportiveSolution solve_supportive_exact(const Instance& instance, double gamma);

struct OracleResult {
  Policy policy;
  double optimum = 0.0;
  std::size_t enumerated = 0;  // core price vectors visited
};

// Enumerates every core price vector (lexicographic in price index, ties keep
// the first) and solves the separable supportive problem exactly for each.
// Throws InfeasibleError when |Omega_c|^N exceeds the cap.
OracleResult brute_force_solve(const Instance& instance,
                               std::size_t enumeration_cap = kDefaultEnumerationCap);

// |Omega_c|^N, saturating at SIZE_MAX.
std::size_t core_vector_count(const Instance& instance);

}  // namespace addon
