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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "addon/matrix.hpp"

namespace addon {

// Finite price menus. Each list is strictly increasing and positive.
struct PriceGrid {
  std::vector<double> core;        // Omega_c
  std::vector<double> supportive;  // Omega_s
  std::vector<double> addon;       // Omega_a, discount prices

  // Largest price over core and supportive menus (p-hat).
  double max_price() const;

  // Throws ConfigError when a list is empty, unsorted or non-positive.
  void validate() const;

  bool operator==(const PriceGrid&) const = default;
};

struct LinearDemandParams {
  double intercept = 0.0;
  double slope = 0.0;

  double at(double price) const { return intercept + slope * price; }
  bool operator==(const LinearDemandParams&) const = default;
};

// Linear coefficients for every product and demand type.
struct LinearDemandModel {
  std::vector<LinearDemandParams> core_alpha;        // N entries
  std::vector<LinearDemandParams> supportive_alpha;  // M entries
  std::vector<LinearDemandParams> supportive_beta;   // M entries
};

// Bernoulli purchase probabilities tabulated on the price grids.
struct DemandTable {
  ProbTable alpha_core;           // N x |Omega_c|
  ProbTable alpha_supportive;     // M x |Omega_s|
  ProbTable beta_addon_discount;  // M x |Omega_a|, beta'
  ProbTable beta_addon_original;  // M x |Omega_s|, beta

  bool operator==(const DemandTable&) const = default;
};

struct Instance {
  std::size_t n_core = 0;        // N
  std::size_t n_supportive = 0;  // M
  std::size_t space_limit = 0;   // S
  PriceGrid grid;
  DemandTable demand;

  // Checks counts, grid ordering, table shapes and that every entry is a
  // probability. Throws InfeasibleError on table problems, ConfigError on
  // counts and grids.
  void validate() const;

  // Same instance with a different add-on budget.
  Instance with_space_limit(std::size_t s) const;

  bool operator==(const Instance&) const = default;
};

enum class EffectLevel { kLow, kMedium, kHigh };

// 2, 3 and 4 respectively.
double effect_multiplier(EffectLevel level);
EffectLevel parse_effect_level(const std::string& name);
std::string to_string(EffectLevel level);

// Evaluates linear demand on the grids. beta' = min(1, multiplier * beta)
// on Omega_a; the unscaled values must already lie in [0,1], otherwise the
// scenario is rejected with InfeasibleError.
DemandTable tabulate(const LinearDemandModel& model, const PriceGrid& grid,
                     double effect_multiplier);

// The 3-console / 20-game instance with the estimated coefficients.
LinearDemandModel bundled_demand_model();
PriceGrid bundled_price_grid();
Instance bundled_scenario(EffectLevel level, std::size_t space_limit);

// Scenario files. Either linear coefficients plus "effect_multiplier", or an
// explicit "demand" object holding the four matrices.
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const LinearDemandModel& model,
                                const PriceGrid& grid, double multiplier,
                                std::size_t space_limit);
nlohmann::json instance_to_json(const Instance& instance);
Instance load_scenario(const std::filesystem::path& path);

// Accepts a file path or "bundled:<low|medium|high>:<S>".
Instance resolve_scenario(const std::string& selector);

}  // namespace addon
