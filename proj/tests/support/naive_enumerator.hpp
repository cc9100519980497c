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

// Exhaustive search over every decision variable: core prices, supportive
// prices, add-on flags and discount prices. Shares no code with the library
// solvers; revenue is computed directly from the problem statement.

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "addon/demand.hpp"

namespace addon::testing {

struct NaiveResult {
  double optimum = -std::numeric_limits<double>::infinity();
  std::size_t policies = 0;
};

inline double naive_revenue(const Instance& inst, const std::vector<std::size_t>& core,
                            const std::vector<std::size_t>& supp,
                            const std::vector<int>& discount /* -1 = not flagged */) {
  const auto& d = inst.demand;
  const auto& g = inst.grid;
  double total = 0.0;
  double gamma = 0.0;
  for (std::size_t n = 0; n < inst.n_core; ++n) {
    total += d.alpha_core(n, core[n]) * g.core[core[n]];
    gamma += d.alpha_core(n, core[n]);
  }
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    total += d.alpha_supportive(m, supp[m]) * g.supportive[supp[m]];
    if (discount[m] >= 0) {
      const auto a = static_cast<std::size_t>(discount[m]);
      total += gamma * d.beta_addon_discount(m, a) * g.addon[a];
    } else {
      total += gamma * d.beta_addon_original(m, supp[m]) * g.supportive[supp[m]];
    }
  }
  return total;
}

inline NaiveResult naive_optimum(const Instance& inst) {
  NaiveResult best;
  std::vector<std::size_t> core(inst.n_core, 0);
  std::vector<std::size_t> supp(inst.n_supportive, 0);
  std::vector<int> discount(inst.n_supportive, -1);

  // Recursion over supportive products: choose price, then either no
  // discount or any feasible discount while the budget allows.
  std::function<void(std::size_t, std::size_t)> supportive = [&](std::size_t m,
                                                                 std::size_t used) {
    if (m == inst.n_supportive) {
      ++best.policies;
      best.optimum = std::max(best.optimum, naive_revenue(inst, core, supp, discount));
      return;
    }
    for (std::size_t c = 0; c < inst.grid.supportive.size(); ++c) {
      supp[m] = c;
      discount[m] = -1;
      supportive(m + 1, used);
      if (used < inst.space_limit) {
        for (std::size_t a = 0; a < inst.grid.addon.size(); ++a) {
          if (!(inst.grid.addon[a] < inst.grid.supportive[c])) continue;
          discount[m] = static_cast<int>(a);
          supportive(m + 1, used + 1);
        }
        discount[m] = -1;
      }
    }
  };
  std::function<void(std::size_t)> cores = [&](std::size_t n) {
    if (n == inst.n_core) {
      supportive(0, 0);
      return;
    }
    for (std::size_t c = 0; c < inst.grid.core.size(); ++c) {
      core[n] = c;
      cores(n + 1);
    }
  };
  cores(0);
  return best;
}

}  // namespace addon::testing
