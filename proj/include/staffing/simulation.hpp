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

#ifndef STAFFING_SIMULATION_HPP_
#define STAFFING_SIMULATION_HPP_

// Discrete-event FCFS M/M/n simulation (unit service rate) used as an
// empirical check on the delay formulas.

#include <cstdint>
#include <span>
#include <vector>

#include "staffing/scenarios.hpp"
#include "staffing/stoch_single.hpp"

namespace staffing {

inline constexpr std::int64_t kMinMeasuredCustomers = 10000;

struct SimConfig {
  std::int64_t servers = 1;
  double lambda = 0.5;
  /// Customers discarded before measuring; negative means 10 * servers.
  std::int64_t warmup_customers = -1;
  std::int64_t measured_customers = 100000;
  int replications = 10;
  std::uint64_t seed = 1;

  std::int64_t effective_warmup() const {
    return warmup_customers < 0 ? 10 * servers : warmup_customers;
  }
};

struct SimEstimate {
  double wait_prob_mean = 0.0;   // fraction of arrivals finding all servers busy
  double ci99_halfwidth = 0.0;
  int replications_used = 0;
  /// Time-average P{Q >= n} over the same windows.
  double time_average_mean = 0.0;
  double time_average_ci99 = 0.0;
  /// Paired per-replication difference arrival-seen minus time-average.
  double pasta_difference_mean = 0.0;
  double pasta_difference_ci99 = 0.0;
  std::vector<double> per_replication;

  bool contains(double value) const {
    return value >= wait_prob_mean - ci99_halfwidth && value <= wait_prob_mean + ci99_halfwidth;
  }
  /// Arrival-seen and time-average estimates agree within their intervals.
  bool pasta_consistent() const;
};

void validate(const SimConfig& config);

SimEstimate simulate_wait_probability(const SimConfig& config);

/// Probability-weighted wait fraction with one fixed staffing level.
/// config.servers and config.lambda are ignored.
SimEstimate simulate_scenario_qos(const ScenarioSet& scenarios, std::int64_t servers,
                                  const SimConfig& config);

SimEstimate simulate_scenario_qos(const ScenarioSet& scenarios,
                                  const StaffingDecision& decision, const SimConfig& config);

/// Expected union wait 1 - sum_w p_w prod_i (1 - wait_i), stations simulated
/// independently per arrival-rate level. Unstable levels count as always waiting.
SimEstimate simulate_scenario_qos(const JointScenarioSet& scenarios,
                                  std::span<const std::int64_t> servers,
                                  const SimConfig& config);

}  // namespace staffing

#endif  // STAFFING_SIMULATION_HPP_
