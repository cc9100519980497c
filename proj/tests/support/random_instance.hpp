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

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "addon/demand.hpp"

namespace addon::testing {

struct RandomInstanceLimits {
  std::size_t max_core = 3;
  std::size_t max_supportive = 4;
  std::size_t max_grid = 4;
  double min_price = 1.0;
  double max_price = 100.0;
};

inline std::vector<double> random_menu(std::mt19937_64& rng, std::size_t size, double lo,
                                       double hi) {
  std::uniform_real_distribution<double> price(lo, hi);
  std::set<double> values;
  while (values.size() < size) values.insert(price(rng));
  return {values.begin(), values.end()};
}

inline ProbTable random_table(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  ProbTable t(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) t(r, c) = prob(rng);
  }
  return t;
}

// Uniform probabilities in [0,1], uniform prices, arbitrary S in [0, M].
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceLimits& lim = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Instance inst;
  inst.n_core = pick(1, lim.max_core);
  inst.n_supportive = pick(0, lim.max_supportive);
  inst.space_limit = pick(0, inst.n_supportive);
  inst.grid.core = random_menu(rng, pick(1, lim.max_grid), lim.min_price, lim.max_price);
  inst.grid.supportive = random_menu(rng, pick(1, lim.max_grid), lim.min_price, lim.max_price);
  inst.grid.addon = random_menu(rng, pick(1, lim.max_grid), lim.min_price, lim.max_price);
  inst.demand.alpha_core = random_table(rng, inst.n_core, inst.grid.core.size());
  inst.demand.alpha_supportive = random_table(rng, inst.n_supportive, inst.grid.supportive.size());
  inst.demand.beta_addon_discount = random_table(rng, inst.n_supportive, inst.grid.addon.size());
  inst.demand.beta_addon_original =
      random_table(rng, inst.n_supportive, inst.grid.supportive.size());
  inst.validate();
  return inst;
}

}  // namespace addon::testing
