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

#ifndef STAFFING_STOCH_SINGLE_HPP_
#define STAFFING_STOCH_SINGLE_HPP_

// One station whose arrival rate is drawn from a finite scenario set. The
// staffing n = Lambda_key + beta * sqrt(Lambda_key) is fixed before the rate is
// observed.

#include <cstdint>
#include <string_view>
#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"
#include "staffing/scenarios.hpp"

namespace staffing {

/// Tail sums closer than this to epsilon are treated as ties.
inline constexpr double kTailTieTolerance = 1e-12;

struct StaffingDecision {
  double beta = 0.0;
  std::size_t key_index = 0;
  double key_rate = 0.0;
  double n_continuous = 0.0;
  std::int64_t n_integer = 0;  // nearest integer to n_continuous
};

enum class StochMethod { kReducedExact, kReducedUpper, kExactEnumeration };

std::string_view to_string(StochMethod method);

struct StochSolveReport {
  StaffingDecision decision;
  /// sum_w p_w * P{wait} at n_continuous, continuous Erlang-C.
  double expected_wait = 1.0;
  /// Same sum at n_integer with the integer Erlang-C formula.
  double expected_wait_integer = 1.0;
  double objective = 0.0;
  double slack = 0.0;  // epsilon - expected_wait
  bool infeasible_warning = false;
  StochMethod method = StochMethod::kReducedExact;
  /// Exact enumeration only: keys whose optimal cost ties the minimum.
  std::vector<std::size_t> optimal_keys;
  int evaluations = 0;
};

std::size_t select_key_scenario(const ScenarioSet& scenarios, double epsilon);

StaffingDecision make_decision(const ScenarioSet& scenarios, std::size_t key, double beta);

/// sum_w p_w * w(servers, Lambda_w); unstable scenarios contribute 1.
double expected_wait(const ScenarioSet& scenarios, double servers,
                     DelayModel model = DelayModel::kExact);

double expected_wait_integer(const ScenarioSet& scenarios, std::int64_t servers);

/// sum_{k > key} p_k + p_key * w(beta, Lambda_key).
double reduced_wait(const ScenarioSet& scenarios, std::size_t key, double beta,
                    DelayModel model = DelayModel::kExact);

StochSolveReport solve_reduced(const ScenarioSet& scenarios, double epsilon,
                               const CostFunction& cost = CostFunction::linear_in_servers(1.0),
                               DelayModel bound = DelayModel::kExact);

StochSolveReport solve_exact_enumeration(
    const ScenarioSet& scenarios, double epsilon,
    const CostFunction& cost = CostFunction::linear_in_servers(1.0));

}  // namespace staffing

#endif  // STAFFING_STOCH_SINGLE_HPP_
