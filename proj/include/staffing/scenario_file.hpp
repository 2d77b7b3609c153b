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

#ifndef STAFFING_SCENARIO_FILE_HPP_
#define STAFFING_SCENARIO_FILE_HPP_

// JSON problem files. Rates are stored as written; division by the service
// rate happens when the file is turned into solver inputs.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"
#include "staffing/scenarios.hpp"

namespace staffing {

inline constexpr std::string_view kScenarioFileVersion = "staffing-scenarios/1";

inline constexpr std::array<std::string_view, 8> kSolveModes = {
    "det",
    "stoch-single",
    "stoch-single-exact",
    "stoch-multi-joint",
    "stoch-multi-integer",
    "stoch-multi-decoupled",
    "stoch-multi-reduced",
    "stoch-multi-weighted",
};

bool is_solve_mode(std::string_view mode);

struct LevelSpec {
  std::string name;
  double rate = 0.0;
  bool operator==(const LevelSpec&) const = default;
};

struct StationSpec {
  std::string id;
  double service_rate = 1.0;
  std::optional<double> rate;     // deterministic arrival rate
  std::vector<LevelSpec> levels;  // named arrival-rate levels
  bool operator==(const StationSpec&) const = default;
};

/// Exactly one of level_names / rates is filled.
struct ScenarioSpec {
  std::vector<std::string> level_names;
  std::vector<double> rates;
  double probability = 0.0;
  bool operator==(const ScenarioSpec&) const = default;
};

struct CostSpec {
  CostFunction::Kind kind = CostFunction::Kind::kLinearInServers;
  std::vector<double> coefficients;                               // one per station
  std::vector<std::vector<std::pair<double, double>>> tables;     // kTable only
  bool operator==(const CostSpec&) const = default;
};

struct ProblemSpec {
  std::optional<double> epsilon;
  std::optional<double> delta;
  CostSpec cost;
  std::string solver;  // default mode, may be empty
  std::string bound = "exact";
  bool operator==(const ProblemSpec&) const = default;
};

struct ScenarioFile {
  std::string version = std::string(kScenarioFileVersion);
  std::vector<StationSpec> stations;
  std::vector<ScenarioSpec> scenarios;
  ProblemSpec problem;
  bool operator==(const ScenarioFile&) const = default;
};

/// Throws Error(kValidation) whose pointer() names the offending field.
ScenarioFile parse_scenario_file(std::string_view json_text);
ScenarioFile load_scenario_file(const std::string& path);
std::string to_json(const ScenarioFile& file, int indent = 2);
void save_scenario_file(const ScenarioFile& file, const std::string& path);

/// Semantic checks; parse_scenario_file already runs them.
void validate(const ScenarioFile& file);

/// FNV-1a 64 of the canonical (compact, key-sorted) JSON.
std::uint64_t input_digest(const ScenarioFile& file);
std::string digest_hex(std::uint64_t digest);

bool has_scenarios(const ScenarioFile& file);
/// Normalised rates lambda / mu.
JointScenarioSet to_joint_scenarios(const ScenarioFile& file);
std::vector<double> deterministic_rates(const ScenarioFile& file);
std::vector<double> prices(const ScenarioFile& file);
std::vector<CostFunction> cost_functions(const ScenarioFile& file);
/// Name of the level with this normalised rate, or a formatted rate.
std::string level_name(const ScenarioFile& file, std::size_t station, double normalized_rate);

}  // namespace staffing

#endif  // STAFFING_SCENARIO_FILE_HPP_
