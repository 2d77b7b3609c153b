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

#include "staffing/scenario_file.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "staffing/error.hpp"

namespace staffing {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& pointer, const std::string& message) {
  fail(ErrorCode::kValidation, pointer + ": " + message, pointer);
}

const json& member(const json& object, const char* key, const std::string& pointer) {
  const auto it = object.find(key);
  if (it == object.end()) invalid(pointer + "/" + key, "required field is missing");
  return *it;
}

double number(const json& value, const std::string& pointer) {
  if (!value.is_number()) invalid(pointer, "expected a number");
  return value.get<double>();
}

std::string text(const json& value, const std::string& pointer) {
  if (!value.is_string()) invalid(pointer, "expected a string");
  return value.get<std::string>();
}

const json& array(const json& value, const std::string& pointer) {
  if (!value.is_array()) invalid(pointer, "expected an array");
  return value;
}

const json& object(const json& value, const std::string& pointer) {
  if (!value.is_object()) invalid(pointer, "expected an object");
  return value;
}

std::optional<double> optional_number(const json& obj, const char* key,
                                      const std::string& pointer) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return number(*it, pointer + "/" + key);
}

void check_positive(double v, const std::string& pointer, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) invalid(pointer, std::string(what) + " must be positive");
}

StationSpec parse_station(const json& j, const std::string& pointer) {
  object(j, pointer);
  StationSpec s;
  s.id = text(member(j, "id", pointer), pointer + "/id");
  if (auto mu = optional_number(j, "service_rate", pointer)) s.service_rate = *mu;
  s.rate = optional_number(j, "rate", pointer);
  if (const auto it = j.find("levels"); it != j.end()) {
    const std::string lp = pointer + "/levels";
    array(*it, lp);
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string p = lp + "/" + std::to_string(k);
      const json& level = object((*it)[k], p);
      s.levels.push_back({text(member(level, "name", p), p + "/name"),
                          number(member(level, "rate", p), p + "/rate")});
    }
  }
  return s;
}

ScenarioSpec parse_scenario(const json& j, const std::string& pointer) {
  object(j, pointer);
  ScenarioSpec s;
  s.probability = number(member(j, "probability", pointer), pointer + "/probability");
  const bool by_name = j.contains("levels");
  const bool by_rate = j.contains("rates");
  if (by_name == by_rate) invalid(pointer, "give exactly one of 'levels' or 'rates'");
  const std::string lp = pointer + (by_name ? "/levels" : "/rates");
  const json& values = array(j.at(by_name ? "levels" : "rates"), lp);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::string p = lp + "/" + std::to_string(k);
    if (by_name) {
      s.level_names.push_back(text(values[k], p));
    } else {
      s.rates.push_back(number(values[k], p));
    }
  }
  return s;
}

CostSpec parse_cost(const json& j, const std::string& pointer) {
  object(j, pointer);
  CostSpec c;
  if (const auto it = j.find("kind"); it != j.end()) {
    try {
      c.kind = parse_cost_kind(text(*it, pointer + "/kind"));
    } catch (const Error& e) {
      invalid(pointer + "/kind", e.what());
    }
  }
  if (const auto it = j.find("coefficients"); it != j.end()) {
    array(*it, pointer + "/coefficients");
    for (std::size_t k = 0; k < it->size(); ++k) {
      c.coefficients.push_back(number((*it)[k], pointer + "/coefficients/" + std::to_string(k)));
    }
  }
  if (const auto it = j.find("tables"); it != j.end()) {
    array(*it, pointer + "/tables");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string tp = pointer + "/tables/" + std::to_string(t);
      std::vector<std::pair<double, double>> knots;
      for (std::size_t k = 0; k < array((*it)[t], tp).size(); ++k) {
        const std::string kp = tp + "/" + std::to_string(k);
        const json& knot = array((*it)[t][k], kp);
        if (knot.size() != 2) invalid(kp, "table knots are [beta, cost] pairs");
        knots.emplace_back(number(knot[0], kp + "/0"), number(knot[1], kp + "/1"));
      }
      c.tables.push_back(std::move(knots));
    }
  }
  return c;
}

ProblemSpec parse_problem(const json& j, const std::string& pointer) {
  object(j, pointer);
  ProblemSpec p;
  p.epsilon = optional_number(j, "epsilon", pointer);
  p.delta = optional_number(j, "delta", pointer);
  if (const auto it = j.find("cost"); it != j.end()) p.cost = parse_cost(*it, pointer + "/cost");
  if (const auto it = j.find("solver"); it != j.end()) p.solver = text(*it, pointer + "/solver");
  if (const auto it = j.find("bound"); it != j.end()) p.bound = text(*it, pointer + "/bound");
  return p;
}

json to_json_value(const ScenarioFile& f) {
  json stations = json::array();
  for (const auto& s : f.stations) {
    json js = {{"id", s.id}, {"service_rate", s.service_rate}};
    if (s.rate) js["rate"] = *s.rate;
    if (!s.levels.empty()) {
      json levels = json::array();
      for (const auto& l : s.levels) levels.push_back({{"name", l.name}, {"rate", l.rate}});
      js["levels"] = std::move(levels);
    }
    stations.push_back(std::move(js));
  }
  json scenarios = json::array();
  for (const auto& sc : f.scenarios) {
    json js = {{"probability", sc.probability}};
    if (!sc.level_names.empty()) {
      js["levels"] = sc.level_names;
    } else {
      js["rates"] = sc.rates;
    }
    scenarios.push_back(std::move(js));
  }
  json cost = {{"kind", std::string(to_string(f.problem.cost.kind))},
               {"coefficients", f.problem.cost.coefficients}};
  if (!f.problem.cost.tables.empty()) {
    json tables = json::array();
    for (const auto& t : f.problem.cost.tables) {
      json knots = json::array();
      for (const auto& [b, c] : t) knots.push_back({b, c});
      tables.push_back(std::move(knots));
    }
    cost["tables"] = std::move(tables);
  }
  json problem = {{"cost", std::move(cost)}, {"bound", f.problem.bound}};
  if (f.problem.epsilon) problem["epsilon"] = *f.problem.epsilon;
  if (f.problem.delta) problem["delta"] = *f.problem.delta;
  if (!f.problem.solver.empty()) problem["solver"] = f.problem.solver;

  json out = {{"version", f.version}, {"stations", std::move(stations)},
              {"problem", std::move(problem)}};
  if (!f.scenarios.empty()) out["scenarios"] = std::move(scenarios);
  return out;
}

// Scenario rate vector in file units.
std::vector<double> raw_rates(const ScenarioFile& f, std::size_t w) {
  const ScenarioSpec& sc = f.scenarios[w];
  if (!sc.rates.empty()) return sc.rates;
  std::vector<double> out;
  for (std::size_t i = 0; i < sc.level_names.size(); ++i) {
    const auto& levels = f.stations[i].levels;
    const auto it = std::find_if(levels.begin(), levels.end(), [&](const LevelSpec& l) {
      return l.name == sc.level_names[i];
    });
    out.push_back(it->rate);
  }
  return out;
}

}  // namespace

bool is_solve_mode(std::string_view mode) {
  return std::find(kSolveModes.begin(), kSolveModes.end(), mode) != kSolveModes.end();
}

ScenarioFile parse_scenario_file(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kValidation, std::string("malformed JSON: ") + e.what(), "");
  }
  object(j, "");
  ScenarioFile f;
  f.version = text(member(j, "version", ""), "/version");
  const json& stations = array(member(j, "stations", ""), "/stations");
  for (std::size_t i = 0; i < stations.size(); ++i) {
    f.stations.push_back(parse_station(stations[i], "/stations/" + std::to_string(i)));
  }
  if (const auto it = j.find("scenarios"); it != j.end()) {
    array(*it, "/scenarios");
    for (std::size_t w = 0; w < it->size(); ++w) {
      f.scenarios.push_back(parse_scenario((*it)[w], "/scenarios/" + std::to_string(w)));
    }
  }
  if (const auto it = j.find("problem"); it != j.end()) f.problem = parse_problem(*it, "/problem");
  validate(f);
  return f;
}

void validate(const ScenarioFile& f) {
  if (f.version != kScenarioFileVersion) {
    invalid("/version", "unsupported version '" + f.version + "', expected '" +
                            std::string(kScenarioFileVersion) + "'");
  }
  if (f.stations.empty()) invalid("/stations", "at least one station is required");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < f.stations.size(); ++i) {
    const std::string p = "/stations/" + std::to_string(i);
    const StationSpec& s = f.stations[i];
    if (s.id.empty()) invalid(p + "/id", "station id must be non-empty");
    if (!ids.insert(s.id).second) invalid(p + "/id", "duplicate station id '" + s.id + "'");
    check_positive(s.service_rate, p + "/service_rate", "service rate");
    if (s.rate) check_positive(*s.rate, p + "/rate", "arrival rate");
    std::set<std::string> names;
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
      const std::string lp = p + "/levels/" + std::to_string(k);
      if (s.levels[k].name.empty()) invalid(lp + "/name", "level name must be non-empty");
      if (!names.insert(s.levels[k].name).second) {
        invalid(lp + "/name", "duplicate level name '" + s.levels[k].name + "'");
      }
      check_positive(s.levels[k].rate, lp + "/rate", "arrival rate");
    }
  }

  double total = 0.0;
  for (std::size_t w = 0; w < f.scenarios.size(); ++w) {
    const std::string p = "/scenarios/" + std::to_string(w);
    const ScenarioSpec& sc = f.scenarios[w];
    if (!(sc.probability > 0.0 && sc.probability <= 1.0)) {
      invalid(p + "/probability", "probability must lie in (0, 1]");
    }
    total += sc.probability;
    const bool by_name = !sc.level_names.empty();
    if (by_name == !sc.rates.empty()) invalid(p, "give exactly one of 'levels' or 'rates'");
    const std::size_t count = by_name ? sc.level_names.size() : sc.rates.size();
    const std::string lp = p + (by_name ? "/levels" : "/rates");
    if (count != f.stations.size()) {
      invalid(lp, "expected " + std::to_string(f.stations.size()) + " entries, got " +
                      std::to_string(count));
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::string ep = lp + "/" + std::to_string(i);
      if (by_name) {
        const auto& levels = f.stations[i].levels;
        const bool known = std::any_of(levels.begin(), levels.end(), [&](const LevelSpec& l) {
          return l.name == sc.level_names[i];
        });
        if (!known) {
          invalid(ep, "station '" + f.stations[i].id + "' has no level '" + sc.level_names[i] + "'");
        }
      } else {
        check_positive(sc.rates[i], ep, "arrival rate");
      }
    }
  }
  if (!f.scenarios.empty() && std::abs(total - 1.0) > kProbabilitySumTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", total);
    invalid("/scenarios", std::string("probabilities sum to ") + buf + ", expected 1");
  }

  const ProblemSpec& pr = f.problem;
  if (pr.epsilon && !(*pr.epsilon > 0.0 && *pr.epsilon < 1.0)) {
    invalid("/problem/epsilon", "epsilon must lie strictly between 0 and 1");
  }
  if (pr.delta) check_positive(*pr.delta, "/problem/delta", "delta");
  if (!pr.solver.empty() && !is_solve_mode(pr.solver)) {
    invalid("/problem/solver", "unknown solver '" + pr.solver + "'");
  }
  try {
    parse_delay_model(pr.bound);
  } catch (const Error& e) {
    invalid("/problem/bound", e.what());
  }
  const CostSpec& c = pr.cost;
  if (c.kind == CostFunction::Kind::kTable) {
    if (c.tables.size() != f.stations.size()) {
      invalid("/problem/cost/tables", "need one table per station");
    }
    for (std::size_t t = 0; t < c.tables.size(); ++t) {
      try {
        CostFunction::table(c.tables[t]);
      } catch (const Error& e) {
        invalid("/problem/cost/tables/" + std::to_string(t), e.what());
      }
    }
  } else if (!c.coefficients.empty()) {
    if (c.coefficients.size() != f.stations.size()) {
      invalid("/problem/cost/coefficients", "need one coefficient per station");
    }
    for (std::size_t k = 0; k < c.coefficients.size(); ++k) {
      check_positive(c.coefficients[k], "/problem/cost/coefficients/" + std::to_string(k),
                     "cost coefficient");
    }
  }
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_file(buffer.str());
}

std::string to_json(const ScenarioFile& file, int indent) {
  return to_json_value(file).dump(indent);
}

void save_scenario_file(const ScenarioFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << to_json(file) << '\n';
}

std::uint64_t input_digest(const ScenarioFile& file) {
  const std::string canonical = to_json_value(file).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

bool has_scenarios(const ScenarioFile& file) { return !file.scenarios.empty(); }

JointScenarioSet to_joint_scenarios(const ScenarioFile& file) {
  if (file.scenarios.empty()) invalid("/scenarios", "this mode needs a scenario list");
  std::vector<JointScenario> out;
  for (std::size_t w = 0; w < file.scenarios.size(); ++w) {
    std::vector<double> rates = raw_rates(file, w);
    for (std::size_t i = 0; i < rates.size(); ++i) rates[i] /= file.stations[i].service_rate;
    out.push_back({std::move(rates), file.scenarios[w].probability});
  }
  return JointScenarioSet(std::move(out));
}

std::vector<double> deterministic_rates(const ScenarioFile& file) {
  std::vector<double> out;
  for (std::size_t i = 0; i < file.stations.size(); ++i) {
    const StationSpec& s = file.stations[i];
    if (!s.rate) invalid("/stations/" + std::to_string(i) + "/rate", "this mode needs a rate");
    out.push_back(*s.rate / s.service_rate);
  }
  return out;
}

std::vector<double> prices(const ScenarioFile& file) {
  const CostSpec& c = file.problem.cost;
  if (c.kind == CostFunction::Kind::kTable) {
    invalid("/problem/cost/kind", "this mode needs per-server prices, not cost tables");
  }
  if (c.coefficients.empty()) return std::vector<double>(file.stations.size(), 1.0);
  return c.coefficients;
}

std::vector<CostFunction> cost_functions(const ScenarioFile& file) {
  const CostSpec& c = file.problem.cost;
  std::vector<CostFunction> out;
  for (std::size_t i = 0; i < file.stations.size(); ++i) {
    switch (c.kind) {
      case CostFunction::Kind::kTable:
        out.push_back(CostFunction::table(c.tables[i]));
        break;
      case CostFunction::Kind::kLinearInBeta:
        out.push_back(CostFunction::linear_in_beta(c.coefficients.empty() ? 1.0 : c.coefficients[i]));
        break;
      case CostFunction::Kind::kLinearInServers:
        out.push_back(
            CostFunction::linear_in_servers(c.coefficients.empty() ? 1.0 : c.coefficients[i]));
        break;
    }
  }
  return out;
}

std::string level_name(const ScenarioFile& file, std::size_t station, double normalized_rate) {
  const StationSpec& s = file.stations.at(station);
  for (const auto& l : s.levels) {
    if (std::abs(l.rate / s.service_rate - normalized_rate) <= 1e-12 * normalized_rate) {
      return l.name;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", normalized_rate * s.service_rate);
  return buf;
}

}  // namespace staffing
