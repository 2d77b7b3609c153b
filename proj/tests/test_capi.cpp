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

// Exercises the shared library through the C interface only.

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "doctest.h"
#include "staffing/staffing.h"

namespace {

const std::string kExample = std::string(STAFFING_DATA_DIR) + "/example1.json";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and exit codes") {
  CHECK(std::string(stf_status_name(STF_OK)) == "ok");
  CHECK(std::string(stf_status_name(STF_ERR_INFEASIBLE)) == "infeasible");
  CHECK(stf_exit_code(STF_OK) == 0);
  CHECK(stf_exit_code(STF_ERR_VALIDATION) == 2);
  CHECK(stf_exit_code(STF_ERR_BOUNDARY) == 2);
  CHECK(stf_exit_code(STF_ERR_IO) == 2);
  CHECK(stf_exit_code(STF_ERR_SOLVER) == 3);
  CHECK(stf_exit_code(STF_ERR_INTERNAL) == 3);
  CHECK(stf_exit_code(STF_ERR_INFEASIBLE) == 4);
  CHECK(std::string(stf_version()) == STAFFING_VERSION);
}

TEST_CASE("delay probabilities") {
  double v = 0.0;
  REQUIRE(stf_erlang_c(1, 0.5, &v) == STF_OK);
  CHECK(v == doctest::Approx(0.5));
  REQUIRE(stf_erlang_c_continuous(2.0, 1.0, &v) == STF_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0));
  REQUIRE(stf_halfin_whitt(1.0, &v) == STF_OK);
  CHECK(v == doctest::Approx(0.2233612747982607));
  double lo = 0.0, hi = 0.0;
  REQUIRE(stf_jvlz_bounds(1.0, 100.0, &lo, &hi) == STF_OK);
  double exact = 0.0;
  REQUIRE(stf_wait_probability(110.0, 100.0, STF_BOUND_EXACT, &exact) == STF_OK);
  CHECK(lo <= exact);
  CHECK(exact <= hi);
  REQUIRE(stf_wait_probability(110.0, 100.0, STF_BOUND_UPPER, &v) == STF_OK);
  CHECK(v == doctest::Approx(hi));

  CHECK(stf_erlang_c(3, 4.0, &v) == STF_ERR_UNSTABLE);
  CHECK(std::string(stf_last_error()).find("unstable") != std::string::npos);
  CHECK(stf_erlang_c(0, 0.5, &v) == STF_ERR_DOMAIN);
  CHECK(stf_erlang_c(3, 1.0, nullptr) == STF_ERR_ARGUMENT);
  CHECK(stf_wait_probability(3.0, 1.0, static_cast<stf_bound>(42), &v) == STF_ERR_VALIDATION);
  REQUIRE(stf_erlang_c(3, 1.0, &v) == STF_OK);
  CHECK(std::string(stf_last_error()).empty());
}

TEST_CASE("last error is per thread") {
  double v = 0.0;
  CHECK(stf_erlang_c(3, 4.0, &v) == STF_ERR_UNSTABLE);
  std::string other;
  std::thread t([&] {
    double w = 0.0;
    stf_erlang_c(3, 1.0, &w);
    other = stf_last_error();
  });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(stf_last_error()).empty());
}

TEST_CASE("scenario file handles") {
  stf_scenario_file* file = nullptr;
  REQUIRE(stf_scenario_file_load(kExample.c_str(), &file) == STF_OK);
  CHECK(stf_scenario_file_station_count(file) == 2);
  CHECK(stf_scenario_file_scenario_count(file) == 6);

  char* text = nullptr;
  REQUIRE(stf_scenario_file_to_json(file, &text) == STF_OK);
  stf_scenario_file* copy = nullptr;
  REQUIRE(stf_scenario_file_parse(text, &copy) == STF_OK);
  std::uint64_t a = 0, b = 0;
  stf_scenario_file_digest(file, &a);
  stf_scenario_file_digest(copy, &b);
  CHECK(a == b);
  stf_string_free(text);
  stf_scenario_file_free(copy);

  const std::int64_t n[] = {496, 235};
  double no_wait = 0.0;
  REQUIRE(stf_joint_constraint_value(file, n, 2, &no_wait) == STF_OK);
  CHECK(std::abs(no_wait - 0.95) <= 0.005);
  stf_scenario_file_free(file);

  CHECK(stf_scenario_file_load("/nonexistent.json", &file) == STF_ERR_IO);
  CHECK(file == nullptr);
  CHECK(stf_scenario_file_parse(R"({"version":"staffing-scenarios/1","stations":[{"id":"a","rate":-1}]})",
                                &file) == STF_ERR_VALIDATION);
  CHECK(std::string(stf_last_error_pointer()) == "/stations/0/rate");
  stf_scenario_file_free(nullptr);
  stf_report_free(nullptr);
  stf_string_free(nullptr);
}

TEST_CASE("solve, compare and frontier reports") {
  stf_scenario_file* file = nullptr;
  REQUIRE(stf_scenario_file_load(kExample.c_str(), &file) == STF_OK);

  stf_report* report = nullptr;
  REQUIRE(stf_compare(file, 0, 0.0, &report) == STF_OK);
  REQUIRE(stf_report_staffing_count(report) == 2);
  CHECK(stf_report_staffing(report, 0) == 496);
  CHECK(stf_report_staffing(report, 1) == 235);
  CHECK(stf_report_staffing(report, 2) == -1);
  CHECK(stf_report_cost(report) == 3185.0);
  CHECK(std::string(stf_report_text(report, STF_FORMAT_TABLE)).find("cost ratio") !=
        std::string::npos);
  stf_report_free(report);

  stf_solve_options o;
  stf_solve_options_init(&o);
  o.mode = "stoch-multi-decoupled";
  REQUIRE(stf_solve(file, &o, &report) == STF_OK);
  CHECK(stf_report_staffing(report, 0) == 484);
  CHECK(stf_report_staffing(report, 1) == 306);
  CHECK(stf_report_cost(report) == 3338.0);
  CHECK(stf_report_achieved_wait(report) <= 0.055);
  stf_report_free(report);

  o.mode = "no-such-mode";
  CHECK(stf_solve(file, &o, &report) == STF_ERR_VALIDATION);
  CHECK(report == nullptr);

  o.mode = "stoch-multi-reduced";
  o.has_epsilon = 1;
  o.epsilon = 0.6;  // the tail sum of (high, high) is 0.4
  CHECK(stf_solve(file, &o, &report) == STF_OK);
  stf_report_free(report);
  stf_scenario_file_free(file);

  stf_frontier_options f;
  stf_frontier_options_init(&f);
  f.lambda = 100.0;
  REQUIRE(stf_frontier(&f, &report) == STF_OK);
  CHECK(stf_report_staffing_count(report) == 19);
  CHECK(stf_report_failures(report) == 0);
  stf_report_free(report);
  f.from = 0.5;
  f.to = 0.4;
  CHECK(stf_frontier(&f, &report) == STF_ERR_VALIDATION);
}

TEST_CASE("boundary and infeasible statuses") {
  stf_scenario_file* file = nullptr;
  REQUIRE(stf_scenario_file_parse(R"({"version":"staffing-scenarios/1",
    "stations":[{"id":"q","levels":[{"name":"lo","rate":10},{"name":"hi","rate":20}]}],
    "scenarios":[{"levels":["lo"],"probability":0.5},{"levels":["hi"],"probability":0.5}],
    "problem":{"epsilon":0.5,"solver":"stoch-single"}})",
                                  &file) == STF_OK);
  stf_report* report = nullptr;
  CHECK(stf_solve(file, nullptr, &report) == STF_ERR_BOUNDARY);
  stf_scenario_file_free(file);

  // Light loads: even the largest safety factor cannot push the wait
  // probability down to 1e-200.
  REQUIRE(stf_scenario_file_parse(R"({"version":"staffing-scenarios/1",
    "stations":[{"id":"a","levels":[{"name":"lo","rate":1},{"name":"hi","rate":2}]}],
    "scenarios":[{"levels":["lo"],"probability":0.5},{"levels":["hi"],"probability":0.5}],
    "problem":{"epsilon":1e-200}})",
                                  &file) == STF_OK);
  stf_solve_options o;
  stf_solve_options_init(&o);
  o.mode = "stoch-single-exact";
  CHECK(stf_solve(file, &o, &report) == STF_ERR_INFEASIBLE);
  o.mode = "stoch-single";
  CHECK(stf_solve(file, &o, &report) == STF_ERR_SOLVER);
  CHECK(stf_exit_code(STF_ERR_INFEASIBLE) == 4);
  stf_scenario_file_free(file);
}

TEST_CASE("simulation through the C interface") {
  stf_simulate_options o;
  stf_simulate_options_init(&o);
  o.servers = 2;
  o.lambda = 1.0;
  o.measured_customers = 50000;
  stf_report* report = nullptr;
  REQUIRE(stf_simulate(&o, &report) == STF_OK);
  CHECK(std::string(stf_report_text(report, STF_FORMAT_JSON)).find("\"inside_ci99\"") !=
        std::string::npos);
  stf_report_free(report);
  o.lambda = 3.0;
  CHECK(stf_simulate(&o, &report) == STF_ERR_UNSTABLE);
}

}  // TEST_SUITE
