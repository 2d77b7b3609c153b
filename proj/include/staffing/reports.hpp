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

#ifndef STAFFING_REPORTS_HPP_
#define STAFFING_REPORTS_HPP_

// Command-level drivers shared by the C API and the CLI. Each returns a run
// record in three renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"
#include "staffing/scenario_file.hpp"
#include "staffing/simulation.hpp"

namespace staffing {

struct Report {
  std::string command;
  std::string json;   // full precision
  std::string table;  // 6 significant digits
  std::string csv;
  std::vector<std::int64_t> staffing;
  double cost = 0.0;
  /// Exact re-evaluation: expected wait (one station) or expected union wait.
  double achieved_wait = 0.0;
  double objective = 0.0;
  /// Frontier points that could not be solved.
  int failures = 0;
};

struct SolveOptions {
  std::string mode;  // empty: the file's problem.solver
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<std::string> bound;
};

Report run_solve(const ScenarioFile& file, const SolveOptions& options);

Report run_compare(const ScenarioFile& file, std::optional<double> epsilon = std::nullopt);

struct FrontierOptions {
  double lambda = 0.0;
  double from = 0.05;
  double to = 0.95;
  double step = 0.05;
  DelayModel bound = DelayModel::kExact;
  CostFunction cost;
};

Report run_frontier(const FrontierOptions& options);

struct SimulateOptions {
  SimConfig config;
  /// With a file, `servers` staffs each station and scenarios are simulated.
  const ScenarioFile* file = nullptr;
  std::vector<std::int64_t> servers;
};

Report run_simulate(const SimulateOptions& options);

/// Fixed-point text used in CSV output.
std::string format_fixed(double value, int decimals = 10);
/// Six significant digits, used in tables.
std::string format_sig(double value);

}  // namespace staffing

#endif  // STAFFING_REPORTS_HPP_
