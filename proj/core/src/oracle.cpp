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

#include "addon/oracle.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "addon/errors.hpp"

namespace addon {

double exact_policy_revenue(const Instance& inst, const Policy& policy) {
  validate_policy(inst, policy);
  const auto& d = inst.demand;
  const auto& g = inst.grid;

  double core_revenue = 0.0;
  double gamma = 0.0;
  for (std::size_t n = 0; n < inst.n_core; ++n) {
    const std::size_t c = policy.core_prices[n];
    core_revenue += d.alpha_core(n, c) * g.core[c];
    gamma += d.alpha_core(n, c);
  }

  double primary = 0.0;
  double addon = 0.0;
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    const auto& choice = policy.supportive[m];
    primary += d.alpha_supportive(m, choice.price) * g.supportive[choice.price];
    if (choice.discount) {
      addon += d.beta_addon_discount(m, *choice.discount) * g.addon[*choice.discount];
    } else {
      addon += d.beta_addon_original(m, choice.price) * g.supportive[choice.price];
    }
  }
  return core_revenue + primary + gamma * addon;
}

SupportiveSolution solve_supportive_exact(const Instance& inst, double gamma) {
  const auto& d = inst.demand;
  const auto& g = inst.grid;
  struct Candidate {
    std::size_t product;
    double gain;
  };

  SupportiveSolution out;
  out.choices.resize(inst.n_supportive);
  std::vector<double> plain(inst.n_supportive);
  std::vector<double> discounted(inst.n_supportive, -std::numeric_limits<double>::infinity());
  std::vector<SupportiveChoice> discounted_choice(inst.n_supportive);

  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < g.supportive.size(); ++c) {
      const double p = g.supportive[c];
      const double v = d.alpha_supportive(m, c) * p + gamma * d.beta_addon_original(m, c) * p;
      if (v > best) {
        best = v;
        out.choices[m] = {c, std::nullopt};
      }
      for (std::size_t a = 0; a < g.addon.size(); ++a) {
        if (!(g.addon[a] < p)) continue;
        const double w =
            d.alpha_supportive(m, c) * p + gamma * d.beta_addon_discount(m, a) * g.addon[a];
        if (w > discounted[m]) {
          discounted[m] = w;
          discounted_choice[m] = {c, a};
        }
      }
    }
    plain[m] = best;
  }

  std::vector<Candidate> gains;
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    const double gain = discounted[m] - plain[m];
    if (gain > 0.0) gains.push_back({m, gain});
  }
  std::stable_sort(gains.begin(), gains.end(),
                   [](const Candidate& a, const Candidate& b) { return a.gain > b.gain; });
  if (gains.size() > inst.space_limit) gains.resize(inst.space_limit);
  for (const auto& cand : gains) out.choices[cand.product] = discounted_choice[cand.product];

  out.revenue = 0.0;
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    out.revenue += out.choices[m].flagged() ? discounted[m] : plain[m];
  }
  return out;
}

std::size_t core_vector_count(const Instance& inst) {
  std::size_t total = 1;
  const std::size_t base = inst.grid.core.size();
  for (std::size_t n = 0; n < inst.n_core; ++n) {
    if (base != 0 && total > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= base;
  }
  return total;
}

OracleResult brute_force_solve(const Instance& inst, std::size_t enumeration_cap) {
  inst.validate();
  const std::size_t count = core_vector_count(inst);
  if (count > enumeration_cap) {
    throw InfeasibleError(fmt::format(
        "{} core price vectors exceed the enumeration cap {}; use the FPTAS instead",
        count, enumeration_cap));
  }
  const auto& d = inst.demand;
  const auto& g = inst.grid;

  OracleResult best;
  best.optimum = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(inst.n_core, 0);
  for (std::size_t visit = 0; visit < count; ++visit) {
    double core_revenue = 0.0;
    double gamma = 0.0;
    for (std::size_t n = 0; n < inst.n_core; ++n) {
      core_revenue += d.alpha_core(n, idx[n]) * g.core[idx[n]];
      gamma += d.alpha_core(n, idx[n]);
    }
    SupportiveSolution supp = solve_supportive_exact(inst, gamma);
    const double total = core_revenue + supp.revenue;
    if (total > best.optimum) {
      best.optimum = total;
      best.policy.core_prices = idx;
      best.policy.supportive = std::move(supp.choices);
    }
    // odometer, last product fastest
    for (std::size_t n = inst.n_core; n-- > 0;) {
      if (++idx[n] < g.core.size()) break;
      idx[n] = 0;
    }
  }
  best.enumerated = count;
  return best;
}

}  // namespace addon
