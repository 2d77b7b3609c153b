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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "staffing/erlang.hpp"
#include "staffing/error.hpp"
#include "staffing/simulation.hpp"
#include "staffing/stoch_multi.hpp"
#include "staffing/stoch_single.hpp"

using namespace staffing;

namespace {

SimConfig config(std::int64_t n, double lambda, std::uint64_t seed = 11,
                 std::int64_t customers = 200000) {
  SimConfig c;
  c.servers = n;
  c.lambda = lambda;
  c.measured_customers = customers;
  c.replications = 10;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_SUITE("simulation") {

TEST_CASE("formula values fall inside the 99% interval") {
  struct Point {
    std::int64_t n;
    double lambda;
  };
  for (const Point p : {Point{1, 0.5}, Point{2, 1.0}, Point{496, 450.0}}) {
    const SimEstimate e = simulate_wait_probability(config(p.n, p.lambda));
    const double exact = erlang_c_exact(p.n, p.lambda);
    CAPTURE(p.n);
    CHECK(e.contains(exact));
    CHECK(e.ci99_halfwidth > 0.0);
    CHECK(e.replications_used == 10);
    CHECK(e.pasta_consistent());
  }
}

TEST_CASE("identical seeds give identical estimates") {
  const SimEstimate a = simulate_wait_probability(config(20, 17.0, 5, 20000));
  const SimEstimate b = simulate_wait_probability(config(20, 17.0, 5, 20000));
  const SimEstimate c = simulate_wait_probability(config(20, 17.0, 6, 20000));
  CHECK(a.per_replication == b.per_replication);
  CHECK(a.wait_prob_mean == b.wait_prob_mean);
  CHECK(a.ci99_halfwidth == b.ci99_halfwidth);
  CHECK(a.per_replication != c.per_replication);
}

TEST_CASE("coverage over independent seeds") {
  const double exact = erlang_c_exact(5, 3.5);
  int covered = 0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    const SimEstimate e =
        simulate_wait_probability(config(5, 3.5, 1000 + static_cast<std::uint64_t>(t), 10000));
    if (e.contains(exact)) ++covered;
  }
  CHECK(covered >= 38);
}

TEST_CASE("scenario QoS estimates") {
  const ScenarioSet one({40.0}, {1.0});
  const SimEstimate single = simulate_scenario_qos(one, 45, config(0, 0.0, 3, 100000));
  CHECK(single.contains(erlang_c_exact(45, 40.0)));

  // Staffing at the middle scenario: the full expected wait differs from the
  // reduced value; simulation recovers the full one.
  const ScenarioSet s({90.0, 100.0, 110.0}, {0.3, 0.4, 0.3});
  const StaffingDecision d = make_decision(s, 1, 1.2);
  const SimEstimate est = simulate_scenario_qos(s, d, config(0, 0.0, 4, 100000));
  const double full = expected_wait_integer(s, d.n_integer);
  CHECK(est.contains(full));
  const double reduced = reduced_wait(s, 1, (d.n_integer - 100.0) / 10.0);
  CHECK(std::abs(full - reduced) > est.ci99_halfwidth);
}

TEST_CASE("joint scenario QoS on the two-queue example") {
  const JointScenarioSet s({{{450.0, 300.0}, 0.03},
                            {{450.0, 200.0}, 0.21},
                            {{450.0, 100.0}, 0.10},
                            {{350.0, 300.0}, 0.01},
                            {{350.0, 200.0}, 0.17},
                            {{350.0, 100.0}, 0.48}});
  const std::vector<std::int64_t> n = {496, 235};
  const SimEstimate e = simulate_scenario_qos(s, n, config(0, 0.0, 9, 100000));
  CHECK(e.contains(1.0 - joint_constraint_value(s, n)));
  CHECK(std::abs(e.wait_prob_mean - 0.05) < 0.01);
}

TEST_CASE("configuration checks") {
  CHECK_THROWS_AS(simulate_wait_probability(config(3, 3.0)), Error);
  try {
    simulate_wait_probability(config(3, 4.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnstable);
  }
  CHECK_THROWS_AS(simulate_wait_probability(config(3, 1.0, 1, 100)), Error);
  SimConfig c = config(3, 1.0);
  c.replications = 1;
  CHECK_THROWS_AS(simulate_wait_probability(c), Error);
  CHECK(config(7, 1.0).effective_warmup() == 70);
}

}  // TEST_SUITE
