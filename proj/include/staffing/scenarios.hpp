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

#ifndef STAFFING_SCENARIOS_HPP_
#define STAFFING_SCENARIOS_HPP_

// Finite arrival-rate distributions: one station (ScenarioSet) and several
// stations observed jointly (JointScenarioSet).

#include <span>
#include <vector>

namespace staffing {

/// Probabilities must sum to 1 within this tolerance; construction then
/// renormalises them exactly.
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// Single-station distribution with strictly increasing rates.
class ScenarioSet {
 public:
  /// Sorts by rate and merges exactly equal rates by adding probabilities.
  ScenarioSet(std::vector<double> rates, std::vector<double> probabilities);

  std::size_t size() const { return rates_.size(); }
  std::span<const double> rates() const { return rates_; }
  std::span<const double> probabilities() const { return probabilities_; }
  double rate(std::size_t i) const { return rates_[i]; }
  double probability(std::size_t i) const { return probabilities_[i]; }

  /// sum_{k >= i} p_k; tail_probability(size()) == 0.
  double tail_probability(std::size_t i) const;

  ScenarioSet scaled(double m) const;

 private:
  std::vector<double> rates_;
  std::vector<double> probabilities_;
};

struct JointScenario {
  std::vector<double> rates;  // one per station
  double probability = 0.0;
};

class JointScenarioSet {
 public:
  /// Identical rate vectors are merged. All vectors must have equal length.
  explicit JointScenarioSet(std::vector<JointScenario> scenarios);

  static JointScenarioSet from_single(const ScenarioSet& set);

  std::size_t stations() const { return stations_; }
  std::size_t size() const { return scenarios_.size(); }
  const std::vector<JointScenario>& scenarios() const { return scenarios_; }
  const JointScenario& operator[](std::size_t i) const { return scenarios_[i]; }

  /// Distinct rates of one station, ascending (the marginal support).
  std::span<const double> levels(std::size_t station) const { return levels_[station]; }
  /// Index into levels(station) of scenario `scenario`'s rate.
  std::size_t level_of(std::size_t scenario, std::size_t station) const {
    return level_index_[scenario][station];
  }

  ScenarioSet marginal(std::size_t station) const;
  JointScenarioSet scaled(double m) const;

 private:
  std::size_t stations_ = 0;
  std::vector<JointScenario> scenarios_;
  std::vector<std::vector<double>> levels_;
  std::vector<std::vector<std::size_t>> level_index_;
};

}  // namespace staffing

#endif  // STAFFING_SCENARIOS_HPP_
