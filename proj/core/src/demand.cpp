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

#include "addon/demand.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "addon/errors.hpp"

namespace addon {
namespace {

// Slack for probabilities produced by decimal coefficients, e.g. an
// intercept of 1.0 minus a zero slope term.
constexpr double kProbTol = 1e-12;

void check_menu(const std::vector<double>& prices, const char* name) {
  if (prices.empty()) {
    throw ConfigError(fmt::format("{} price list is empty", name));
  }
  for (std::size_t i = 0; i < prices.size(); ++i) {
    if (!(prices[i] > 0.0)) {
      throw ConfigError(fmt::format("{} price {} is not positive", name, prices[i]));
    }
    if (i > 0 && !(prices[i] > prices[i - 1])) {
      throw ConfigError(fmt::format("{} prices are not strictly increasing", name));
    }
  }
}

double checked_probability(const LinearDemandParams& p, double price,
                           const char* what, std::size_t product) {
  const double v = p.at(price);
  if (v < -kProbTol || v > 1.0 + kProbTol) {
    throw InfeasibleError(fmt::format(
        "{} of product {} at price {} is {}, outside [0,1]", what, product + 1,
        price, v));
  }
  return std::clamp(v, 0.0, 1.0);
}

void check_table(const ProbTable& t, std::size_t rows, std::size_t cols,
                 const char* name) {
  if (t.rows() != rows || t.cols() != cols) {
    throw InfeasibleError(fmt::format("{} has shape {}x{}, expected {}x{}", name,
                                      t.rows(), t.cols(), rows, cols));
  }
  for (double v : t.values()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InfeasibleError(fmt::format("{} holds {}, outside [0,1]", name, v));
    }
  }
}

LinearDemandParams params_from_json(const nlohmann::json& j) {
  return {j.at("intercept").get<double>(), j.at("slope").get<double>()};
}

std::vector<LinearDemandParams> params_list(const nlohmann::json& doc,
                                            const char* key) {
  std::vector<LinearDemandParams> out;
  for (const auto& j : doc.at(key)) out.push_back(params_from_json(j));
  return out;
}

ProbTable table_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  ProbTable t(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw InfeasibleError("ragged demand matrix");
    for (std::size_t c = 0; c < cols; ++c) t(r, c) = j.at(r).at(c).get<double>();
  }
  return t;
}

nlohmann::json table_to_json(const ProbTable& t) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    auto row = t.row(r);
    out.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return out;
}

nlohmann::json params_to_json(const std::vector<LinearDemandParams>& ps) {
  auto out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back({{"intercept", p.intercept}, {"slope", p.slope}});
  return out;
}

}  // namespace

double PriceGrid::max_price() const {
  double hi = 0.0;
  for (double p : core) hi = std::max(hi, p);
  for (double p : supportive) hi = std::max(hi, p);
  return hi;
}

void PriceGrid::validate() const {
  check_menu(core, "core");
  check_menu(supportive, "supportive");
  check_menu(addon, "add-on");
}

void Instance::validate() const {
  if (n_core < 1) throw ConfigError("an instance needs at least one core product");
  if (space_limit > n_supportive) {
    throw ConfigError(fmt::format("space limit {} exceeds supportive count {}",
                                  space_limit, n_supportive));
  }
  grid.validate();
  check_table(demand.alpha_core, n_core, grid.core.size(), "alpha_core");
  check_table(demand.alpha_supportive, n_supportive, grid.supportive.size(),
              "alpha_supportive");
  check_table(demand.beta_addon_discount, n_supportive, grid.addon.size(),
              "beta_addon_discount");
  check_table(demand.beta_addon_original, n_supportive, grid.supportive.size(),
              "beta_addon_original");
}

Instance Instance::with_space_limit(std::size_t s) const {
  Instance copy = *this;
  copy.space_limit = s;
  copy.validate();
  return copy;
}

double effect_multiplier(EffectLevel level) {
  switch (level) {
    case EffectLevel::kLow:
      return 2.0;
    case EffectLevel::kMedium:
      return 3.0;
    case EffectLevel::kHigh:
      return 4.0;
  }
  return 3.0;
}

EffectLevel parse_effect_level(const std::string& name) {
  if (name == "low") return EffectLevel::kLow;
  if (name == "medium") return EffectLevel::kMedium;
  if (name == "high") return EffectLevel::kHigh;
  throw ConfigError(fmt::format("unknown effect level '{}'", name));
}

std::string to_string(EffectLevel level) {
  switch (level) {
    case EffectLevel::kLow:
      return "low";
    case EffectLevel::kMedium:
      return "medium";
    case EffectLevel::kHigh:
      return "high";
  }
  return "medium";
}

DemandTable tabulate(const LinearDemandModel& model, const PriceGrid& grid,
                     double multiplier) {
  grid.validate();
  if (!(multiplier > 0.0)) throw ConfigError("effect multiplier must be positive");
  if (model.supportive_alpha.size() != model.supportive_beta.size()) {
    throw InfeasibleError("supportive alpha and beta coefficient counts differ");
  }
  const std::size_t n = model.core_alpha.size();
  const std::size_t m = model.supportive_alpha.size();

  DemandTable t{ProbTable(n, grid.core.size()), ProbTable(m, grid.supportive.size()),
                ProbTable(m, grid.addon.size()), ProbTable(m, grid.supportive.size())};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < grid.core.size(); ++c) {
      t.alpha_core(i, c) = checked_probability(model.core_alpha[i], grid.core[c], "alpha", i);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t c = 0; c < grid.supportive.size(); ++c) {
      const double p = grid.supportive[c];
      t.alpha_supportive(j, c) =
          checked_probability(model.supportive_alpha[j], p, "supportive alpha", j);
      t.beta_addon_original(j, c) =
          checked_probability(model.supportive_beta[j], p, "beta", j);
    }
    for (std::size_t c = 0; c < grid.addon.size(); ++c) {
      const double base =
          checked_probability(model.supportive_beta[j], grid.addon[c], "beta", j);
      t.beta_addon_discount(j, c) = std::min(1.0, multiplier * base);
    }
  }
  return t;
}

LinearDemandModel bundled_demand_model() {
  LinearDemandModel model;
  model.core_alpha = {{0.975, -7.25e-04}, {0.27, -2.00e-04}, {1.15, -8.50e-04}};
  // {alpha intercept, alpha slope, beta intercept, beta slope} per game.
  constexpr double kGames[20][4] = {
      {0.085, -4.38e-04, 0.050, -2.50e-04}, {0.353, -1.81e-03, 0.208, -1.04e-03},
      {0.097, -5.00e-04, 0.057, -2.88e-04}, {0.073, -3.75e-04, 0.043, -2.13e-04},
      {0.044, -2.25e-04, 0.027, -1.38e-04}, {0.260, -1.34e-03, 0.153, -7.63e-04},
      {0.029, -1.50e-04, 0.017, -8.75e-05}, {0.024, -1.25e-04, 0.015, -7.50e-05},
      {0.066, -3.38e-04, 0.038, -1.88e-04}, {0.013, -6.25e-05, 0.008, -3.75e-05},
      {0.243, -1.25e-03, 0.143, -7.13e-04}, {0.015, -7.50e-05, 0.008, -3.75e-05},
      {0.063, -3.25e-04, 0.037, -1.88e-04}, {0.129, -6.63e-04, 0.077, -3.88e-04},
      {0.095, -4.88e-04, 0.057, -2.88e-04}, {0.019, -1.00e-04, 0.012, -6.25e-05},
      {0.019, -1.00e-04, 0.012, -6.25e-05}, {0.316, -1.63e-03, 0.187, -9.38e-04},
      {0.241, -1.24e-03, 0.142, -7.13e-04}, {0.019, -1.00e-04, 0.012, -6.25e-05},
  };
  for (const auto& g : kGames) {
    model.supportive_alpha.push_back({g[0], g[1]});
    model.supportive_beta.push_back({g[2], g[3]});
  }
  return model;
}

PriceGrid bundled_price_grid() {
  return {{200, 400, 600, 800}, {80, 100, 120, 140, 160}, {80, 100, 120, 140}};
}

Instance bundled_scenario(EffectLevel level, std::size_t space_limit) {
  const LinearDemandModel model = bundled_demand_model();
  Instance inst{model.core_alpha.size(), model.supportive_alpha.size(), space_limit,
                bundled_price_grid(), {}};
  inst.demand = tabulate(model, inst.grid, effect_multiplier(level));
  inst.validate();
  return inst;
}

Instance instance_from_json(const nlohmann::json& doc) {
  try {
    Instance inst;
    inst.n_core = doc.at("n_core").get<std::size_t>();
    inst.n_supportive = doc.at("n_supportive").get<std::size_t>();
    inst.space_limit = doc.at("space_limit").get<std::size_t>();
    inst.grid.core = doc.at("core_prices").get<std::vector<double>>();
    inst.grid.supportive = doc.at("supportive_prices").get<std::vector<double>>();
    inst.grid.addon = doc.at("addon_prices").get<std::vector<double>>();

    if (doc.contains("demand")) {
      const auto& d = doc.at("demand");
      inst.demand.alpha_core = table_from_json(d.at("alpha_core"));
      inst.demand.alpha_supportive = table_from_json(d.at("alpha_supportive"));
      inst.demand.beta_addon_discount = table_from_json(d.at("beta_addon_discount"));
      inst.demand.beta_addon_original = table_from_json(d.at("beta_addon_original"));
    } else {
      LinearDemandModel model;
      model.core_alpha = params_list(doc, "core_alpha");
      model.supportive_alpha = params_list(doc, "supportive_alpha");
      model.supportive_beta = params_list(doc, "supportive_beta");
      if (model.core_alpha.size() != inst.n_core ||
          model.supportive_alpha.size() != inst.n_supportive) {
        throw InfeasibleError("coefficient counts do not match n_core/n_supportive");
      }
      inst.demand = tabulate(model, inst.grid, doc.at("effect_multiplier").get<double>());
    }
    inst.validate();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("malformed scenario: {}", e.what()));
  }
}

nlohmann::json scenario_to_json(const LinearDemandModel& model, const PriceGrid& grid,
                                double multiplier, std::size_t space_limit) {
  return {{"n_core", model.core_alpha.size()},
          {"n_supportive", model.supportive_alpha.size()},
          {"space_limit", space_limit},
          {"core_prices", grid.core},
          {"supportive_prices", grid.supportive},
          {"addon_prices", grid.addon},
          {"effect_multiplier", multiplier},
          {"core_alpha", params_to_json(model.core_alpha)},
          {"supportive_alpha", params_to_json(model.supportive_alpha)},
          {"supportive_beta", params_to_json(model.supportive_beta)}};
}

nlohmann::json instance_to_json(const Instance& inst) {
  return {{"n_core", inst.n_core},
          {"n_supportive", inst.n_supportive},
          {"space_limit", inst.space_limit},
          {"core_prices", inst.grid.core},
          {"supportive_prices", inst.grid.supportive},
          {"addon_prices", inst.grid.addon},
          {"demand",
           {{"alpha_core", table_to_json(inst.demand.alpha_core)},
            {"alpha_supportive", table_to_json(inst.demand.alpha_supportive)},
            {"beta_addon_discount", table_to_json(inst.demand.beta_addon_discount)},
            {"beta_addon_original", table_to_json(inst.demand.beta_addon_original)}}}};
}

Instance load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open scenario '{}'", path.string()));
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("cannot parse '{}': {}", path.string(), e.what()));
  }
  return instance_from_json(doc);
}

Instance resolve_scenario(const std::string& selector) {
  constexpr std::string_view kPrefix = "bundled:";
  if (!selector.starts_with(kPrefix)) return load_scenario(selector);

  const std::string rest = selector.substr(kPrefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("bundled selector must look like bundled:<effect>:<S>");
  }
  const EffectLevel level = parse_effect_level(rest.substr(0, colon));
  const std::string s_text = rest.substr(colon + 1);
  std::size_t s = 0;
  const auto [ptr, ec] = std::from_chars(s_text.data(), s_text.data() + s_text.size(), s);
  if (ec != std::errc{} || ptr != s_text.data() + s_text.size() || s > 20) {
    throw ConfigError(fmt::format("bad space limit '{}' in bundled selector", s_text));
  }
  return bundled_scenario(level, s);
}

}  // namespace addon
