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

#include "addon/policy.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "addon/errors.hpp"

namespace addon {

std::size_t Policy::addon_count() const {
  return static_cast<std::size_t>(
      std::count_if(supportive.begin(), supportive.end(),
                    [](const SupportiveChoice& c) { return c.flagged(); }));
}

void validate_policy(const Instance& inst, const Policy& policy) {
  if (policy.core_prices.size() != inst.n_core ||
      policy.supportive.size() != inst.n_supportive) {
    throw InfeasibleError("policy dimensions do not match the instance");
  }
  for (std::size_t idx : policy.core_prices) {
    if (idx >= inst.grid.core.size()) throw InfeasibleError("core price index out of range");
  }
  for (std::size_t m = 0; m < policy.supportive.size(); ++m) {
    const auto& c = policy.supportive[m];
    if (c.price >= inst.grid.supportive.size()) {
      throw InfeasibleError("supportive price index out of range");
    }
    if (c.discount) {
      if (*c.discount >= inst.grid.addon.size()) {
        throw InfeasibleError("discount price index out of range");
      }
      if (!(inst.grid.addon[*c.discount] < inst.grid.supportive[c.price])) {
        throw InfeasibleError(fmt::format(
            "product {}: discount price {} is not below original price {}", m + 1,
            inst.grid.addon[*c.discount], inst.grid.supportive[c.price]));
      }
    }
  }
  if (policy.addon_count() > inst.space_limit) {
    throw InfeasibleError(fmt::format("{} add-ons exceed the space limit {}",
                                      policy.addon_count(), inst.space_limit));
  }
}

bool is_valid_policy(const Instance& inst, const Policy& policy) {
  try {
    validate_policy(inst, policy);
    return true;
  } catch (const InfeasibleError&) {
    return false;
  }
}

nlohmann::json policy_to_json(const Instance& inst, const Policy& policy) {
  nlohmann::json core = nlohmann::json::array();
  for (std::size_t n = 0; n < policy.core_prices.size(); ++n) {
    core.push_back(policy.core_price(inst.grid, n));
  }
  nlohmann::json supp = nlohmann::json::array();
  for (std::size_t m = 0; m < policy.supportive.size(); ++m) {
    nlohmann::json item = {{"price", policy.supportive_price(inst.grid, m)},
                           {"addon", policy.supportive[m].flagged()}};
    if (auto p = policy.addon_price(inst.grid, m)) item["addon_price"] = *p;
    supp.push_back(item);
  }
  return {{"core_prices", core}, {"supportive", supp}};
}

}  // namespace addon
