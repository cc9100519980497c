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
#include <cstdint>
#include <vector>

#include "addon/demand.hpp"
#include "addon/policy.hpp"
#include "addon/rng.hpp"

namespace addon {

// One period's realized purchases. addon_trials[m] holds one Bernoulli
// outcome per core product bought this period.
struct PeriodObservation {
  std::vector<bool> core_purchases;
  std::vector<bool> supportive_primary_purchases;
  std::vector<std::vector<bool>> addon_trials;
  double revenue = 0.0;

  std::size_t core_purchase_count() const;
};

// Draw slots: core n uses slot n, supportive m uses slot N+m, and the add-on
// trials of m use slot N+M+m with the trial number as the second coordinate.
PeriodObservation simulate_period(const Instance& ground_truth, const Policy& policy,
                                  const DrawStream& stream, std::uint64_t period);

// Recomputes the revenue of an observation from its purchase indicators.
double observation_revenue(const Instance& instance, const Policy& policy,
                           const PeriodObservation& obs);

}  // namespace addon
