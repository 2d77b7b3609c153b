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
#include "oracles.hpp"
#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"
#include "staffing/error.hpp"
#include "staffing/frontier.hpp"

using namespace staffing;

TEST_SUITE("frontier") {

TEST_CASE("cost functions") {
  const auto beta_cost = CostFunction::linear_in_beta(2.0);
  CHECK(beta_cost(1.5, 100.0) == doctest::Approx(3.0));
  const auto server_cost = CostFunction::linear_in_servers(5.0);
  CHECK(server_cost(2.0, 100.0) == doctest::Approx(5.0 * 120.0));
  const auto table = CostFunction::table({{0.0, 1.0}, {1.0, 3.0}, {2.0, 4.0}});
  CHECK(table(0.5, 10.0) == doctest::Approx(2.0));
  CHECK(table(3.0, 10.0) == doctest::Approx(5.0));
  CHECK(table(-1.0, 10.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(CostFunction::table({{0.0, 1.0}}), Error);
  CHECK_THROWS_AS(CostFunction::table({{0.0, 1.0}, {1.0, 1.0}}), Error);
  CHECK_THROWS_AS(CostFunction::table({{1.0, 1.0}, {0.0, 2.0}}), Error);
  CHECK_THROWS_AS(CostFunction::linear_in_beta(0.0), Error);
  for (auto kind : {CostFunction::Kind::kLinearInBeta, CostFunction::Kind::kLinearInServers,
                    CostFunction::Kind::kTable}) {
    CHECK(parse_cost_kind(to_string(kind)) == kind);
  }
}

TEST_CASE("epsilon validation") {
  CHECK_THROWS_AS(validate_epsilon(0.0), Error);
  CHECK_THROWS_AS(validate_epsilon(1.0), Error);
  CHECK_THROWS_AS(validate_epsilon(-0.2), Error);
  CHECK_NOTHROW(validate_epsilon(0.5));
  CHECK_THROWS_AS(solve_F(100.0, 1.0), Error);
}

TEST_CASE("exact model inverts the delay function") {
  const double eps = erlang_c_sqrt(2.15, 450.0);
  const SolveReport r = solve_F(450.0, eps);
  CHECK(r.beta == doctest::Approx(2.15).epsilon(1e-6));
  CHECK(std::abs(r.residual) <= 1e-9);
  CHECK(r.converged);
  CHECK(r.n_integer == static_cast<std::int64_t>(std::ceil(r.n_continuous)));
  CHECK(r.wait_prob_exact == doctest::Approx(eps).epsilon(1e-9));
}

TEST_CASE("large epsilon needs almost no safety staffing") {
  CHECK(solve_F(100.0, 0.999).beta < 0.01);
  CHECK(solve_F(100.0, 0.9999).beta < solve_F(100.0, 0.999).beta);
}

TEST_CASE("exact model is monotone in epsilon with tight residuals") {
  double previous = 1e9;
  for (double eps = 0.01; eps < 0.99; eps += 0.02) {
    const SolveReport r = solve_F(250.0, eps);
    CHECK(std::abs(r.residual) <= 1e-9);
    CHECK(r.beta < previous);
    previous = r.beta;
  }
}

TEST_CASE("bound models bracket the exact model") {
  for (double lambda : {10.0, 100.0, 1000.0}) {
    for (double eps : {0.01, 0.1, 0.5}) {
      const double f = solve_F(lambda, eps).beta;
      const SolveReport g = solve_G(lambda, eps);
      const double lower = solve_G(lambda, eps, {}, DelayModel::kJvlzLower).beta;
      CAPTURE(lambda);
      CAPTURE(eps);
      CHECK(g.beta >= f);
      CHECK(lower <= f);
      CHECK(erlang_c_sqrt(g.beta, lambda) <= eps);
      CHECK(std::abs(g.residual) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(solve_G(100.0, 0.1, {}, DelayModel::kExact), Error);
}

TEST_CASE("bound model converges to the exact model") {
  double previous = 1.0;
  for (double lambda : {1e2, 1e3, 1e4, 1e5}) {
    const double gap = solve_G(lambda, 0.1).beta - solve_F(lambda, 0.1).beta;
    CHECK(gap > 0.0);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-2);
}

TEST_CASE("weighted model") {
  CHECK(solve_weighted(100.0, 1e-9).beta == doctest::Approx(0.0).epsilon(1e-6));

  const double delta = 1e6;
  auto objective = [&](double b) { return b + delta * wait_probability_sqrt(b, 100.0); };
  const oracle::GridMin coarse = oracle::grid_min(objective, 0.0, 10.0, 1e-2);
  const oracle::GridMin fine =
      oracle::grid_min(objective, std::max(0.0, coarse.x - 0.02), coarse.x + 0.02, 1e-4);
  const SolveReport r = solve_weighted(100.0, delta);
  CHECK(r.beta == doctest::Approx(fine.x).epsilon(1e-3));
  CHECK(r.objective <= fine.value + 1e-9);
}

TEST_CASE("weighted optimum supports the frontier's convex hull") {
  const double lambda = 100.0;
  const double delta = 40.0;
  const SolveReport w = solve_weighted(lambda, delta);
  const double w_value = w.beta + delta * erlang_c_sqrt(w.beta, lambda);
  const std::vector<double> grid = epsilon_grid(0.01, 0.99, 0.01);
  for (const FrontierPoint& p : sweep_frontier(lambda, grid)) {
    REQUIRE(p.ok);
    CHECK(w_value <= p.cost + delta * p.wait_prob_exact + 1e-9);
  }
}

TEST_CASE("frontier sweep") {
  const std::vector<double> grid = epsilon_grid(0.1, 0.9, 0.1);
  REQUIRE(grid.size() == 9);
  const auto points = sweep_frontier(100.0, grid);
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].beta < points[i - 1].beta);
    CHECK(points[i].cost <= points[i - 1].cost);
  }
  const std::vector<double> single = {0.2};
  const auto one = sweep_frontier(100.0, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].beta == solve_F(100.0, 0.2).beta);

  CHECK(epsilon_grid(0.05, 0.95, 0.05).size() == 19);
  CHECK(epsilon_grid(0.5, 0.4, 0.05).empty());
  CHECK_THROWS_AS(epsilon_grid(0.1, 0.5, 0.0), Error);
}

TEST_CASE("upper-bound frontier costs dominate exact frontier costs") {
  const std::vector<double> grid = epsilon_grid(0.05, 0.95, 0.05);
  const auto exact = sweep_frontier(500.0, grid);
  const auto upper = sweep_frontier(500.0, grid, {}, DelayModel::kJvlzUpper);
  REQUIRE(exact.size() == upper.size());
  for (std::size_t i = 0; i < exact.size(); ++i) CHECK(upper[i].cost >= exact[i].cost);
}

TEST_CASE("frontier records failing points and continues") {
  // At lambda = 1 no safety factor below the bracket cap reaches 1e-300.
  const std::vector<double> grid = {1e-300, 0.5};
  const auto points = sweep_frontier(1.0, grid);
  REQUIRE(points.size() == 2);
  CHECK_FALSE(points[0].ok);
  CHECK_FALSE(points[0].error.empty());
  CHECK(points[1].ok);
}

}  // TEST_SUITE
