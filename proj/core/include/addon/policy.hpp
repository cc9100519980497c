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
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "addon/demand.hpp"

namespace addon {

// Pricing decision for one supportive product. A discount index is present
// exactly when the product is offered as an add-on.
struct SupportiveChoice {
  std::size_t price = 0;               // index into Omega_s
  std::optional<std::size_t> discount; // index into Omega_a

  bool flagged() const { return discount.has_value(); }
  bool operator==(const SupportiveChoice&) const = default;
};

// Prices are stored as grid indices so that the learner can address its
// counters directly; use the accessors for currency values.
struct Policy {
  std::vector<std::size_t> core_prices;        // index into Omega_c, N entries
  std::vector<SupportiveChoice> supportive;    // M entries

  std::size_t addon_count() const;

  double core_price(const PriceGrid& g, std::size_t n) const { return g.core[core_prices[n]]; }
  double supportive_price(const PriceGrid& g, std::size_t m) const {
    return g.supportive[supportive[m].price];
  }
  std::optional<double> addon_price(const PriceGrid& g, std::size_t m) const {
    if (!supportive[m].discount) return std::nullopt;
    return g.addon[*supportive[m].discount];
  }

  bool operator==(const Policy&) const = default;
};

// Throws InfeasibleError on a shape mismatch, an out-of-range index, more
// than S add-ons, or a discount price not strictly below the original price.
void validate_policy(const Instance& instance, const Policy& policy);
bool is_valid_policy(const Instance& instance, const Policy& policy);

nlohmann::json policy_to_json(const Instance& instance, const Policy& policy);

}  // namespace addon
