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

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "staffing/error.hpp"
#include "staffing/reports.hpp"
#include "staffing/scenario_file.hpp"
#include "staffing/stoch_multi.hpp"

using namespace staffing;
using nlohmann::json;

namespace {

const std::string kExample = std::string(STAFFING_DATA_DIR) + "/example1.json";

std::string error_pointer(const std::string& text) {
  try {
    parse_scenario_file(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValidation);
    return e.pointer();
  }
  return "<no error>";
}

ScenarioFile random_file(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 500.0);
  std::uniform_int_distribution<int> count(1, 3);
  ScenarioFile f;
  const int stations = count(rng);
  for (int i = 0; i < stations; ++i) {
    StationSpec s;
    s.id = "s" + std::to_string(i);
    s.service_rate = u(rng) / 100.0;
    if (rng() % 2) s.rate = u(rng);
    const int levels = count(rng);
    for (int k = 0; k < levels; ++k) s.levels.push_back({"L" + std::to_string(k), u(rng)});
    f.stations.push_back(s);
  }
  const int scenarios = count(rng) + 1;
  std::vector<double> weights;
  double total = 0.0;
  for (int w = 0; w < scenarios; ++w) total += weights.emplace_back(u(rng));
  for (int w = 0; w < scenarios; ++w) {
    ScenarioSpec sc;
    sc.probability = weights[w] / total;
    if (rng() % 2) {
      for (int i = 0; i < stations; ++i) {
        sc.level_names.push_back(f.stations[i].levels[rng() % f.stations[i].levels.size()].name);
      }
    } else {
      for (int i = 0; i < stations; ++i) sc.rates.push_back(u(rng));
    }
    f.scenarios.push_back(sc);
  }
  // Keep the sum within tolerance after rounding.
  double sum = 0.0;
  for (const auto& sc : f.scenarios) sum += sc.probability;
  f.scenarios.back().probability += 1.0 - sum;
  f.problem.epsilon = u(rng) / 600.0;
  if (rng() % 2) f.problem.delta = u(rng);
  f.problem.cost.kind = CostFunction::Kind::kLinearInServers;
  for (int i = 0; i < stations; ++i) f.problem.cost.coefficients.push_back(u(rng));
  f.problem.solver = std::string(kSolveModes[rng() % kSolveModes.size()]);
  f.problem.bound = (rng() % 2) ? "exact" : "upper";
  return f;
}

}  // namespace

TEST_SUITE("scenario_file") {

TEST_CASE("bundled example loads") {
  const ScenarioFile f = load_scenario_file(kExample);
  CHECK(f.stations.size() == 2);
  CHECK(f.scenarios.size() == 6);
  CHECK(f.problem.epsilon == 0.05);
  const JointScenarioSet set = to_joint_scenarios(f);
  CHECK(set.levels(0).size() == 2);
  CHECK(set.levels(1).size() == 3);
  CHECK(prices(f) == std::vector<double>{5.0, 3.0});
  CHECK(level_name(f, 1, 200.0) == "medium");
  CHECK(level_name(f, 0, 450.0) == "high");
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const ScenarioFile f = random_file(rng);
    const ScenarioFile back = parse_scenario_file(to_json(f));
    CHECK(back == f);
    CHECK(input_digest(back) == input_digest(f));
    CHECK(to_json(back) == to_json(f));
  }
  const ScenarioFile example = load_scenario_file(kExample);
  const std::string path = "roundtrip_example.json";
  save_scenario_file(example, path);
  CHECK(load_scenario_file(path) == example);
  std::remove(path.c_str());
}

TEST_CASE("digest ignores formatting and key order") {
  const std::string a = R"({"version":"staffing-scenarios/1","stations":[{"id":"q","rate":5}]})";
  const std::string b = R"({ "stations" : [ { "rate" : 5.0, "id" : "q" } ],
                            "version" : "staffing-scenarios/1" })";
  CHECK(input_digest(parse_scenario_file(a)) == input_digest(parse_scenario_file(b)));
  const std::string c = R"({"version":"staffing-scenarios/1","stations":[{"id":"q","rate":6}]})";
  CHECK(input_digest(parse_scenario_file(a)) != input_digest(parse_scenario_file(c)));
  CHECK(digest_hex(0x1a2b).size() == 16);
}

TEST_CASE("service rates are normalised at ingestion") {
  const ScenarioFile f = parse_scenario_file(R"({
    "version": "staffing-scenarios/1",
    "stations": [{"id": "q", "service_rate": 4, "rate": 200,
                  "levels": [{"name": "a", "rate": 100}, {"name": "b", "rate": 300}]}],
    "scenarios": [{"levels": ["a"], "probability": 0.5}, {"rates": [300], "probability": 0.5}]
  })");
  CHECK(deterministic_rates(f) == std::vector<double>{50.0});
  const JointScenarioSet set = to_joint_scenarios(f);
  CHECK(set.levels(0)[0] == 25.0);
  CHECK(set.levels(0)[1] == 75.0);
}

TEST_CASE("validation errors carry a JSON pointer") {
  const std::string head = R"({"version":"staffing-scenarios/1","stations":[{"id":"a","levels":[{"name":"lo","rate":1},{"name":"hi","rate":2}]}],)";
  CHECK(error_pointer(head + R"("scenarios":[{"levels":["lo"],"probability":0.5},{"levels":["hi"],"probability":0.4}]})") ==
        "/scenarios");
  CHECK(error_pointer(head + R"("scenarios":[{"levels":["mid"],"probability":1}]})") ==
        "/scenarios/0/levels/0");
  CHECK(error_pointer(head + R"("scenarios":[{"levels":["lo"],"probability":-1}]})") ==
        "/scenarios/0/probability");
  CHECK(error_pointer(head + R"("scenarios":[{"rates":[1, 2],"probability":1}]})") ==
        "/scenarios/0/rates");
  CHECK(error_pointer(head + R"("problem":{"epsilon":1.5}})") == "/problem/epsilon");
  CHECK(error_pointer(head + R"("problem":{"solver":"magic"}})") == "/problem/solver");
  CHECK(error_pointer(head + R"("problem":{"bound":"loose"}})") == "/problem/bound");
  CHECK(error_pointer(R"({"version":"staffing-scenarios/1","stations":[{"id":"a","rate":-3}]})") ==
        "/stations/0/rate");
  CHECK(error_pointer(R"({"version":"staffing-scenarios/1","stations":[{"id":"a"},{"id":"a"}]})") ==
        "/stations/1/id");
  CHECK(error_pointer(R"({"version":"staffing-scenarios/1","stations":[{"rate":3}]})") ==
        "/stations/0/id");
  CHECK(error_pointer(R"({"version":"staffing-scenarios/9","stations":[{"id":"a"}]})") ==
        "/version");
  CHECK(error_pointer(R"({"version":"staffing-scenarios/1","stations":[{"id":"a", "rate":"x"}]})") ==
        "/stations/0/rate");
  CHECK(error_pointer("{not json") == "");
  CHECK_THROWS_AS(load_scenario_file("/nonexistent/file.json"), Error);
}

TEST_CASE("run records re-evaluate the exact constraint") {
  const ScenarioFile f = load_scenario_file(kExample);
  const JointScenarioSet set = to_joint_scenarios(f);
  for (const char* mode : {"stoch-multi-joint", "stoch-multi-decoupled", "stoch-multi-reduced",
                           "stoch-multi-integer"}) {
    SolveOptions o;
    o.mode = mode;
    const Report r = run_solve(f, o);
    CAPTURE(mode);
    CHECK(r.achieved_wait ==
          doctest::Approx(1.0 - joint_constraint_value(set, r.staffing)).epsilon(1e-14));
    const json record = json::parse(r.json);
    CHECK(record["command"] == "solve");
    CHECK(record["solver"] == mode);
    CHECK(record["input_digest"] == "fnv1a64:" + digest_hex(input_digest(f)));
    CHECK(record.contains("wall_time_seconds"));
    CHECK(record["version"] == STAFFING_VERSION);
    CHECK(record["achieved_qos"]["evaluation"] == "exact-erlang-c");
  }
}

TEST_CASE("reports are deterministic apart from wall time") {
  const ScenarioFile f = load_scenario_file(kExample);
  const Report a = run_compare(f);
  const Report b = run_compare(f);
  CHECK(a.table == b.table);
  CHECK(a.csv == b.csv);
  json ja = json::parse(a.json), jb = json::parse(b.json);
  ja.erase("wall_time_seconds");
  jb.erase("wall_time_seconds");
  CHECK(ja == jb);
  CHECK(a.staffing == std::vector<std::int64_t>{496, 235});
  CHECK(a.cost == 3185.0);
}

TEST_CASE("frontier report columns") {
  FrontierOptions o;
  o.lambda = 100.0;
  const Report r = run_frontier(o);
  CHECK(r.csv.rfind("epsilon,beta,n_continuous,n_integer,cost,wait_prob_exact,wait_prob_bound", 0) ==
        0);
  int lines = 0;
  for (char c : r.csv) lines += c == '\n';
  CHECK(lines == 20);
  CHECK(r.failures == 0);
  CHECK(format_sig(3.14159265) == "3.14159");
  CHECK(format_fixed(0.5, 3) == "0.500");
}

TEST_CASE("solve modes on small files") {
  const ScenarioFile det = parse_scenario_file(R"({"version":"staffing-scenarios/1",
    "stations":[{"id":"q","rate":100}],
    "problem":{"epsilon":0.1,"cost":{"kind":"linear-in-beta"},"solver":"det"}})");
  const Report r = run_solve(det, {});
  CHECK(r.staffing.size() == 1);
  SolveOptions weighted;
  weighted.delta = 30.0;
  weighted.epsilon.reset();
  ScenarioFile det_w = det;
  det_w.problem.epsilon.reset();
  CHECK(run_solve(det_w, weighted).staffing.size() == 1);

  const ScenarioFile single = parse_scenario_file(R"({"version":"staffing-scenarios/1",
    "stations":[{"id":"q","levels":[{"name":"lo","rate":350},{"name":"hi","rate":450}]}],
    "scenarios":[{"levels":["lo"],"probability":0.66},{"levels":["hi"],"probability":0.34}],
    "problem":{"epsilon":0.0253206,"solver":"stoch-single"}})");
  CHECK(run_solve(single, {}).staffing == std::vector<std::int64_t>{484});
  SolveOptions exact;
  exact.mode = "stoch-single-exact";
  CHECK(run_solve(single, exact).staffing[0] >= 484);

  SolveOptions none;
  ScenarioFile no_mode = det;
  no_mode.problem.solver.clear();
  CHECK_THROWS_AS(run_solve(no_mode, none), Error);
}

}  // TEST_SUITE
