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

#include "addon/fptas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "addon/errors.hpp"

namespace addon {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Revenue coefficients of one supportive product on its grids.
struct ProductTerms {
  std::vector<double> primary;   // alpha(p) * p on Omega_s
  std::vector<double> original;  // beta(p) * p on Omega_s
  std::vector<double> discount;  // beta'(p') * p' on Omega_a
};

std::vector<ProductTerms> product_terms(const Instance& inst) {
  const auto& g = inst.grid;
  const auto& d = inst.demand;
  std::vector<ProductTerms> terms(inst.n_supportive);
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    auto& t = terms[m];
    for (std::size_t c = 0; c < g.supportive.size(); ++c) {
      t.primary.push_back(d.alpha_supportive(m, c) * g.supportive[c]);
      t.original.push_back(d.beta_addon_original(m, c) * g.supportive[c]);
    }
    for (std::size_t c = 0; c < g.addon.size(); ++c) {
      t.discount.push_back(d.beta_addon_discount(m, c) * g.addon[c]);
    }
  }
  return terms;
}

}  // namespace

std::size_t ceil_to_size(double x) {
  if (!(x > 0.0)) return 0;
  const double shaved = x * (1.0 - 1e-12);
  return static_cast<std::size_t>(std::ceil(shaved));
}

SubproblemGrid solve_subproblem_grid(const Instance& inst, std::size_t resolution) {
  if (resolution < 1) throw ConfigError("resolution K must be at least 1");
  const auto& g = inst.grid;
  const std::size_t points = inst.n_core * resolution + 1;
  const auto terms = product_terms(inst);

  SubproblemGrid out;
  out.resolution = resolution;
  out.n_core = inst.n_core;
  out.values.resize(points);
  out.decisions.resize(points);

  std::vector<double> r_plain(inst.n_supportive);
  std::vector<double> r_addon(inst.n_supportive);
  std::vector<SupportiveChoice> plain_choice(inst.n_supportive);
  std::vector<SupportiveChoice> addon_choice(inst.n_supportive);
  std::vector<std::size_t> order(inst.n_supportive);

  for (std::size_t i = 0; i < points; ++i) {
    const double gamma = out.gamma(i);
    for (std::size_t m = 0; m < inst.n_supportive; ++m) {
      const auto& t = terms[m];
      // (a) no discount
      double best = kNegInf;
      std::size_t arg = 0;
      for (std::size_t c = 0; c < g.supportive.size(); ++c) {
        const double v = t.primary[c] + gamma * t.original[c];
        if (v > best) {
          best = v;
          arg = c;
        }
      }
      r_plain[m] = best;
      plain_choice[m] = {arg, std::nullopt};

      // (b) discount p' < p
      best = kNegInf;
      SupportiveChoice choice{0, std::nullopt};
      for (std::size_t c = 0; c < g.supportive.size(); ++c) {
        for (std::size_t d = 0; d < g.addon.size() && g.addon[d] < g.supportive[c]; ++d) {
          const double v = t.primary[c] + gamma * t.discount[d];
          if (v > best) {
            best = v;
            choice = {c, d};
          }
        }
      }
      r_addon[m] = best;
      addon_choice[m] = choice;
    }

    // (c) top-S strictly positive gains, stable on product index
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return r_addon[a] - r_plain[a] > r_addon[b] - r_plain[b];
    });
    std::vector<bool> flag(inst.n_supportive, false);
    for (std::size_t k = 0; k < std::min(inst.space_limit, order.size()); ++k) {
      const std::size_t m = order[k];
      if (r_addon[m] - r_plain[m] > 0.0) flag[m] = true;
    }

    // (d)
    double total = 0.0;
    auto& decision = out.decisions[i];
    decision.resize(inst.n_supportive);
    for (std::size_t m = 0; m < inst.n_supportive; ++m) {
      total += flag[m] ? r_addon[m] : r_plain[m];
      decision[m] = flag[m] ? addon_choice[m] : plain_choice[m];
    }
    out.values[i] = total;
  }
  return out;
}

FptasResult solve_master_dp(const Instance& inst, const SubproblemGrid& subgrid) {
  const std::size_t k = subgrid.resolution;
  const std::size_t n_core = inst.n_core;
  if (k < 1 || subgrid.n_core != n_core || subgrid.size() != n_core * k + 1) {
    throw ConfigError("subproblem grid does not match the instance");
  }
  const auto& g = inst.grid;
  const std::size_t prices = g.core.size();

  // Rounded demand as an integer step on the gamma grid.
  Table<std::size_t> step(n_core, prices);
  for (std::size_t n = 0; n < n_core; ++n) {
    for (std::size_t c = 0; c < prices; ++c) {
      step(n, c) = static_cast<std::size_t>(
          std::lround(inst.demand.alpha_core(n, c) * static_cast<double>(k)));
    }
  }

  // value[i] holds V_{n+1}(i/K); product n can only be reached with
  // gamma <= n (each alpha-hat is at most 1).
  std::vector<double> next = subgrid.values;
  std::vector<double> cur;
  Table<std::size_t> argmax(n_core, subgrid.size(), 0);
  for (std::size_t n = n_core; n-- > 0;) {
    const std::size_t reachable = n * k + 1;
    cur.assign(reachable, kNegInf);
    for (std::size_t i = 0; i < reachable; ++i) {
      for (std::size_t c = 0; c < prices; ++c) {
        const double v = inst.demand.alpha_core(n, c) * g.core[c] + next[i + step(n, c)];
        if (v > cur[i]) {
          cur[i] = v;
          argmax(n, i) = c;
        }
      }
    }
    next.swap(cur);
  }

  FptasResult out;
  out.approx_revenue = next[0];
  std::size_t i = 0;
  for (std::size_t n = 0; n < n_core; ++n) {
    const std::size_t c = argmax(n, i);
    out.policy.core_prices.push_back(c);
    i += step(n, c);
  }
  out.terminal_gamma = i;
  out.policy.supportive = subgrid.decisions[i];
  return out;
}

FptasResult fptas_solve(const Instance& inst, std::size_t resolution) {
  return solve_master_dp(inst, solve_subproblem_grid(inst, resolution));
}

std::size_t resolution_for_epsilon(const Instance& inst, double epsilon,
                                   double revenue_lower_bound) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
  if (!(revenue_lower_bound > 0.0)) throw ConfigError("revenue lower bound must be positive");
  const double scale = inst.grid.max_price() * static_cast<double>(inst.n_supportive) *
                       static_cast<double>(inst.n_core);
  return std::max<std::size_t>(1, ceil_to_size(scale / (revenue_lower_bound * epsilon)));
}

double fptas_error_bound(const Instance& inst, std::size_t resolution) {
  return inst.grid.max_price() * static_cast<double>(inst.n_supportive) *
         static_cast<double>(inst.n_core) / static_cast<double>(resolution);
}

}  // namespace addon
