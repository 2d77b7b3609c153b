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

#ifndef STAFFING_STOCH_MULTI_HPP_
#define STAFFING_STOCH_MULTI_HPP_

// Several stations sharing one random arrival-rate vector. A customer's
// route crosses every station; the QoS target is on the probability that it
// waits nowhere, sum_w p_w prod_i (1 - alpha_i).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"
#include "staffing/scenarios.hpp"

namespace staffing {

/// Per-station index into JointScenarioSet::levels(i).
using KeyVector = std::vector<std::size_t>;

enum class CostBasis {
  kBeta,     // sum_i c_i * beta_i
  kServers,  // sum_i c_i * n_i
};

struct JointDecision {
  std::string method;
  KeyVector key;
  std::vector<double> key_rates;
  std::vector<double> betas;
  std::vector<double> n_continuous;
  std::vector<std::int64_t> n_integer;  // nearest integers
  double objective = 0.0;               // value minimised by the solver
  double cost = 0.0;                    // sum_i c_i * n_integer_i
  double continuous_cost = 0.0;         // sum_i c_i * n_continuous_i
  double model_no_wait = 0.0;           // constraint as the solver saw it
  double achieved_no_wait = 0.0;        // joint_constraint_value(n_integer)
  double expected_union_wait = 1.0;     // 1 - achieved_no_wait
  /// Constant terms of the reduced constraint already reach 1 - epsilon.
  bool over_conservative = false;
  int evaluations = 0;
  bool converged = false;
};

struct IntegerSolution {
  std::vector<std::int64_t> n;
  double cost = 0.0;
  double achieved_no_wait = 0.0;
  double expected_union_wait = 1.0;
  std::vector<std::int64_t> lower;  // search box actually used
  std::vector<std::int64_t> upper;
  std::int64_t lattice_points = 0;  // prefixes visited
};

/// Exact integer Erlang-C per station; alpha = 1 when Lambda >= n.
double joint_constraint_value(const JointScenarioSet& scenarios,
                              std::span<const std::int64_t> servers);

/// Same sum with real server counts and a chosen delay model.
double joint_no_wait(const JointScenarioSet& scenarios, std::span<const double> servers,
                     DelayModel model = DelayModel::kExact);

/// Reduced constraint at a key: factor 0 above the key, 1 below, 1 - w at it.
double reduced_joint_no_wait(const JointScenarioSet& scenarios, const KeyVector& key,
                             std::span<const double> betas,
                             DelayModel model = DelayModel::kExact);

/// Sum of reduced-constraint terms that do not depend on beta.
double reduced_constant_terms(const JointScenarioSet& scenarios, const KeyVector& key);

IntegerSolution solve_joint_exact_integer(const JointScenarioSet& scenarios, double epsilon,
                                          std::span<const double> prices);

JointDecision solve_decoupled(const JointScenarioSet& scenarios, double epsilon,
                              std::span<const double> prices);

JointDecision solve_reduced_joint(const JointScenarioSet& scenarios, double epsilon,
                                  std::span<const double> prices, const KeyVector& key,
                                  DelayModel bound = DelayModel::kExact,
                                  CostBasis basis = CostBasis::kBeta);

/// Full continuous constraint, staffing tied to `key`.
JointDecision solve_joint_continuous(const JointScenarioSet& scenarios, double epsilon,
                                     std::span<const double> prices, const KeyVector& key,
                                     CostBasis basis = CostBasis::kBeta);

struct KeyEnumeration {
  JointDecision best;
  std::vector<JointDecision> feasible;  // lexicographic key order
  std::size_t candidates = 0;
};

/// Keys are compared on sum_i c_i * n_continuous_i.
KeyEnumeration enumerate_key_scenarios(const JointScenarioSet& scenarios, double epsilon,
                                       std::span<const double> prices,
                                       DelayModel bound = DelayModel::kExact,
                                       std::size_t cap = 10000);

/// Key from enumerate_key_scenarios, then solve_joint_continuous at that key.
JointDecision solve_joint_exact_model(const JointScenarioSet& scenarios, double epsilon,
                                      std::span<const double> prices);

struct ComparisonReport {
  JointDecision joint;
  IntegerSolution integer_optimum;
  JointDecision reduced;
  JointDecision decoupled;
  double cost_ratio = 0.0;  // decoupled.cost / joint.cost
};

ComparisonReport compare_solutions(const JointScenarioSet& scenarios, double epsilon,
                                   std::span<const double> prices);

double weighted_stoch_objective(const JointScenarioSet& scenarios, double delta,
                                std::span<const CostFunction> costs, const KeyVector& key,
                                std::span<const double> betas, DelayModel model);

struct WeightedStochResult {
  JointDecision decision;
  double objective = 0.0;        // under the solve model
  double exact_objective = 0.0;  // same point, exact delay model
  DelayModel model = DelayModel::kExact;
};

WeightedStochResult solve_weighted_stoch(const JointScenarioSet& scenarios, double delta,
                                         std::span<const CostFunction> costs,
                                         DelayModel model = DelayModel::kExact,
                                         std::size_t cap = 10000);

/// All key vectors in lexicographic order; throws kEnumerationCap past cap.
std::vector<KeyVector> all_keys(const JointScenarioSet& scenarios, std::size_t cap = 10000);

}  // namespace staffing

#endif  // STAFFING_STOCH_MULTI_HPP_
