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

#include "staffing/stoch_single.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "staffing/error.hpp"
#include "staffing/frontier.hpp"
#include "staffing/optimize.hpp"
#include "parallel.hpp"

namespace staffing {
namespace {

constexpr double kCostTieTolerance = 1e-7;

RootOptions beta_bracket() {
  RootOptions options;
  options.initial_upper = 8.0;
  options.upper_cap = 64.0;
  return options;
}

void finish(StochSolveReport& report, const ScenarioSet& scenarios, double epsilon,
            const CostFunction& cost) {
  const StaffingDecision& d = report.decision;
  report.expected_wait = expected_wait(scenarios, d.n_continuous);
  report.expected_wait_integer = expected_wait_integer(scenarios, d.n_integer);
  report.objective = cost(d.beta, d.key_rate);
  report.slack = epsilon - report.expected_wait;
  report.infeasible_warning = report.slack < -1e-9;
}

}  // namespace

std::string_view to_string(StochMethod method) {
  switch (method) {
    case StochMethod::kReducedExact: return "reduced-exact";
    case StochMethod::kReducedUpper: return "reduced-ub";
    case StochMethod::kExactEnumeration: return "exact-enumeration";
  }
  return "unknown";
}

std::size_t select_key_scenario(const ScenarioSet& scenarios, double epsilon) {
  validate_epsilon(epsilon);
  for (std::size_t i = 1; i < scenarios.size(); ++i) {
    if (std::abs(scenarios.tail_probability(i) - epsilon) <= kTailTieTolerance) {
      fail(ErrorCode::kBoundary,
           "tail probability above scenario " + std::to_string(i - 1) +
               " equals epsilon; key selection needs strict inequalities");
    }
  }
  for (std::size_t i = scenarios.size(); i-- > 0;) {
    if (scenarios.tail_probability(i) >= epsilon) return i;
  }
  return 0;  // tail_probability(0) == 1 > epsilon
}

StaffingDecision make_decision(const ScenarioSet& scenarios, std::size_t key, double beta) {
  if (key >= scenarios.size()) fail(ErrorCode::kValidation, "key scenario index out of range");
  if (!(beta >= 0.0)) fail(ErrorCode::kDomain, "beta must be non-negative");
  StaffingDecision d;
  d.beta = beta;
  d.key_index = key;
  d.key_rate = scenarios.rate(key);
  d.n_continuous = sqrt_staffing(beta, d.key_rate);
  d.n_integer = std::llround(d.n_continuous);
  return d;
}

double expected_wait(const ScenarioSet& scenarios, double servers, DelayModel model) {
  double total = 0.0;
  for (std::size_t k = 0; k < scenarios.size(); ++k) {
    total += scenarios.probability(k) * wait_probability(servers, scenarios.rate(k), model);
  }
  return total;
}

double expected_wait_integer(const ScenarioSet& scenarios, std::int64_t servers) {
  double total = 0.0;
  for (std::size_t k = 0; k < scenarios.size(); ++k) {
    const double rate = scenarios.rate(k);
    const double w = static_cast<double>(servers) > rate ? erlang_c_exact(servers, rate) : 1.0;
    total += scenarios.probability(k) * w;
  }
  return total;
}

double reduced_wait(const ScenarioSet& scenarios, std::size_t key, double beta,
                    DelayModel model) {
  return scenarios.tail_probability(key + 1) +
         scenarios.probability(key) * wait_probability_sqrt(beta, scenarios.rate(key), model);
}

StochSolveReport solve_reduced(const ScenarioSet& scenarios, double epsilon,
                               const CostFunction& cost, DelayModel bound) {
  if (bound != DelayModel::kExact && bound != DelayModel::kJvlzUpper) {
    fail(ErrorCode::kValidation, "reduced model takes the exact or upper bound");
  }
  const std::size_t key = select_key_scenario(scenarios, epsilon);
  const double rate = scenarios.rate(key);
  const double target = (epsilon - scenarios.tail_probability(key + 1)) / scenarios.probability(key);
  const RootResult root = solve_decreasing(
      [&](double beta) { return wait_probability_sqrt(beta, rate, bound); }, target,
      beta_bracket());

  StochSolveReport report;
  report.method =
      bound == DelayModel::kExact ? StochMethod::kReducedExact : StochMethod::kReducedUpper;
  report.decision = make_decision(scenarios, key, root.x);
  report.evaluations = root.evaluations;
  finish(report, scenarios, epsilon, cost);
  return report;
}

StochSolveReport solve_exact_enumeration(const ScenarioSet& scenarios, double epsilon,
                                         const CostFunction& cost) {
  validate_epsilon(epsilon);
  struct Candidate {
    double beta = 0.0;
    double cost = 0.0;
    int evaluations = 0;
  };
  std::vector<std::optional<Candidate>> results(scenarios.size());
  detail::parallel_for(scenarios.size(), [&](std::size_t key) {
    const double rate = scenarios.rate(key);
    try {
      const RootResult root = solve_decreasing(
          [&](double beta) { return expected_wait(scenarios, sqrt_staffing(beta, rate)); },
          epsilon, beta_bracket());
      results[key] = Candidate{root.x, cost(root.x, rate), root.evaluations};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBracket) throw;
    }
  });

  StochSolveReport report;
  report.method = StochMethod::kExactEnumeration;
  std::optional<std::size_t> best;
  for (std::size_t key = 0; key < results.size(); ++key) {
    if (!results[key]) continue;
    report.evaluations += results[key]->evaluations;
    if (!best || results[key]->cost < results[*best]->cost) best = key;
  }
  if (!best) fail(ErrorCode::kInfeasible, "no key scenario admits a feasible beta");

  // Keys giving the same server count tie in cost; prefer the smallest beta.
  const double best_cost = results[*best]->cost;
  const double scale = std::max(1.0, std::abs(best_cost));
  for (std::size_t key = 0; key < results.size(); ++key) {
    if (results[key] && results[key]->cost - best_cost <= kCostTieTolerance * scale) {
      report.optimal_keys.push_back(key);
      if (results[key]->beta < results[*best]->beta) best = key;
    }
  }
  report.decision = make_decision(scenarios, *best, results[*best]->beta);
  finish(report, scenarios, epsilon, cost);
  return report;
}

}  // namespace staffing
