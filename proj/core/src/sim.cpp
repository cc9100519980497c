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

#include "addon/sim.hpp"

#include <algorithm>

namespace addon {

std::size_t PeriodObservation::core_purchase_count() const {
  return static_cast<std::size_t>(std::count(core_purchases.begin(), core_purchases.end(), true));
}

PeriodObservation simulate_period(const Instance& gt, const Policy& policy,
                                  const DrawStream& stream, std::uint64_t period) {
  const auto& d = gt.demand;
  const auto n_core = static_cast<std::uint32_t>(gt.n_core);
  const auto n_supp = static_cast<std::uint32_t>(gt.n_supportive);

  PeriodObservation obs;
  obs.core_purchases.resize(gt.n_core);
  obs.supportive_primary_purchases.resize(gt.n_supportive);
  obs.addon_trials.resize(gt.n_supportive);

  for (std::uint32_t n = 0; n < n_core; ++n) {
    obs.core_purchases[n] =
        stream.bernoulli(d.alpha_core(n, policy.core_prices[n]), period, n, 0);
  }
  for (std::uint32_t m = 0; m < n_supp; ++m) {
    obs.supportive_primary_purchases[m] = stream.bernoulli(
        d.alpha_supportive(m, policy.supportive[m].price), period, n_core + m, 0);
  }
  const std::size_t buyers = obs.core_purchase_count();
  for (std::uint32_t m = 0; m < n_supp; ++m) {
    const auto& choice = policy.supportive[m];
    const double p = choice.discount ? d.beta_addon_discount(m, *choice.discount)
                                     : d.beta_addon_original(m, choice.price);
    auto& trials = obs.addon_trials[m];
    trials.resize(buyers);
    for (std::uint32_t j = 0; j < buyers; ++j) {
      trials[j] = stream.bernoulli(p, period, n_core + n_supp + m, j);
    }
  }
  obs.revenue = observation_revenue(gt, policy, obs);
  return obs;
}

double observation_revenue(const Instance& inst, const Policy& policy,
                           const PeriodObservation& obs) {
  const auto& g = inst.grid;
  double revenue = 0.0;
  for (std::size_t n = 0; n < inst.n_core; ++n) {
    if (obs.core_purchases[n]) revenue += policy.core_price(g, n);
  }
  for (std::size_t m = 0; m < inst.n_supportive; ++m) {
    if (obs.supportive_primary_purchases[m]) revenue += policy.supportive_price(g, m);
    const double addon_price = policy.addon_price(g, m).value_or(policy.supportive_price(g, m));
    for (bool hit : obs.addon_trials[m]) {
      if (hit) revenue += addon_price;
    }
  }
  return revenue;
}

}  // namespace addon
