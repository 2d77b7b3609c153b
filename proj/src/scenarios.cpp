// Copyright 2026 The Staffing Authors
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

#include "staffing/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "staffing/error.hpp"

namespace staffing {
namespace {

void check_probability(double p, const std::string& where) {
  if (!(p > 0.0 && p <= 1.0)) {
    fail(ErrorCode::kValidation, where + ": probability must lie in (0, 1]");
  }
}

void check_rate(double r, const std::string& where) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    fail(ErrorCode::kValidation, where + ": arrival rate must be positive and finite");
  }
}

double checked_total(double total) {
  if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
    fail(ErrorCode::kValidation,
         "scenario probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  return total;
}

}  // namespace

ScenarioSet::ScenarioSet(std::vector<double> rates, std::vector<double> probabilities) {
  if (rates.empty()) fail(ErrorCode::kValidation, "scenario set is empty");
  if (rates.size() != probabilities.size()) {
    fail(ErrorCode::kValidation, "rates and probabilities differ in length");
  }
  std::map<double, double> merged;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    check_rate(rates[i], "scenario " + std::to_string(i));
    check_probability(probabilities[i], "scenario " + std::to_string(i));
    merged[rates[i]] += probabilities[i];
  }
  const double total =
      checked_total(std::accumulate(probabilities.begin(), probabilities.end(), 0.0));
  for (const auto& [rate, p] : merged) {
    rates_.push_back(rate);
    probabilities_.push_back(p / total);
  }
}

double ScenarioSet::tail_probability(std::size_t i) const {
  double tail = 0.0;
  for (std::size_t k = probabilities_.size(); k > i; --k) tail += probabilities_[k - 1];
  return tail;
}

ScenarioSet ScenarioSet::scaled(double m) const {
  std::vector<double> r = rates_;
  for (double& x : r) x *= m;
  return ScenarioSet(std::move(r), probabilities_);
}

JointScenarioSet::JointScenarioSet(std::vector<JointScenario> scenarios) {
  if (scenarios.empty()) fail(ErrorCode::kValidation, "joint scenario set is empty");
  stations_ = scenarios.front().rates.size();
  if (stations_ == 0) fail(ErrorCode::kValidation, "scenarios need at least one station");

  double total = 0.0;
  std::map<std::vector<double>, std::size_t> seen;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const std::string where = "scenario " + std::to_string(s);
    if (scenarios[s].rates.size() != stations_) {
      fail(ErrorCode::kValidation, where + ": rate vector length differs from station count");
    }
    for (const double r : scenarios[s].rates) check_rate(r, where);
    check_probability(scenarios[s].probability, where);
    total += scenarios[s].probability;
    auto [it, inserted] = seen.emplace(scenarios[s].rates, scenarios_.size());
    if (inserted) {
      scenarios_.push_back(std::move(scenarios[s]));
    } else {
      scenarios_[it->second].probability += scenarios[s].probability;
    }
  }
  checked_total(total);
  for (auto& sc : scenarios_) sc.probability /= total;

  levels_.resize(stations_);
  for (std::size_t i = 0; i < stations_; ++i) {
    for (const auto& sc : scenarios_) levels_[i].push_back(sc.rates[i]);
    std::sort(levels_[i].begin(), levels_[i].end());
    levels_[i].erase(std::unique(levels_[i].begin(), levels_[i].end()), levels_[i].end());
  }
  level_index_.resize(scenarios_.size());
  for (std::size_t s = 0; s < scenarios_.size(); ++s) {
    for (std::size_t i = 0; i < stations_; ++i) {
      const auto it =
          std::lower_bound(levels_[i].begin(), levels_[i].end(), scenarios_[s].rates[i]);
      level_index_[s].push_back(static_cast<std::size_t>(it - levels_[i].begin()));
    }
  }
}

JointScenarioSet JointScenarioSet::from_single(const ScenarioSet& set) {
  std::vector<JointScenario> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    out.push_back({{set.rate(i)}, set.probability(i)});
  }
  return JointScenarioSet(std::move(out));
}

ScenarioSet JointScenarioSet::marginal(std::size_t station) const {
  std::vector<double> rates;
  std::vector<double> probs;
  for (const auto& sc : scenarios_) {
    rates.push_back(sc.rates[station]);
    probs.push_back(sc.probability);
  }
  return ScenarioSet(std::move(rates), std::move(probs));
}

JointScenarioSet JointScenarioSet::scaled(double m) const {
  std::vector<JointScenario> out = scenarios_;
  for (auto& sc : out) {
    for (double& r : sc.rates) r *= m;
  }
  return JointScenarioSet(std::move(out));
}

}  // namespace staffing
