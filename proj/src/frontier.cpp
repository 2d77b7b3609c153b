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

#include "staffing/frontier.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "staffing/error.hpp"
#include "staffing/optimize.hpp"

namespace staffing {
namespace {

constexpr double kBetaCap = 64.0;

void validate_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorCode::kValidation, "lambda must be positive and finite");
  }
}

void fill_staffing(SolveReport& report) {
  report.n_continuous = sqrt_staffing(report.beta, report.lambda);
  report.n_integer = static_cast<std::int64_t>(std::ceil(report.n_continuous - 1e-9));
  report.wait_prob_exact = wait_probability_sqrt(report.beta, report.lambda);
}

}  // namespace

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    fail(ErrorCode::kValidation,
         "epsilon must lie strictly between 0 and 1, got " + std::to_string(epsilon));
  }
}

SolveReport solve_constrained(double lambda, double epsilon, const CostFunction& cost,
                              DelayModel model) {
  validate_lambda(lambda);
  validate_epsilon(epsilon);
  RootOptions options;
  options.initial_upper = 8.0;
  options.upper_cap = kBetaCap;
  const RootResult root = solve_decreasing(
      [&](double beta) { return wait_probability_sqrt(beta, lambda, model); }, epsilon,
      options);
  SolveReport report;
  report.lambda = lambda;
  report.beta = root.x;
  report.objective = cost(root.x, lambda);
  report.bound_used = model;
  report.evaluations = root.evaluations;
  report.converged = root.converged;
  report.residual = root.residual;
  fill_staffing(report);
  return report;
}

SolveReport solve_F(double lambda, double epsilon, const CostFunction& cost) {
  return solve_constrained(lambda, epsilon, cost, DelayModel::kExact);
}

SolveReport solve_G(double lambda, double epsilon, const CostFunction& cost, DelayModel bound) {
  if (bound != DelayModel::kJvlzUpper && bound != DelayModel::kJvlzLower) {
    fail(ErrorCode::kValidation, "solve_G takes the upper or lower JVLZ bound");
  }
  return solve_constrained(lambda, epsilon, cost, bound);
}

SolveReport solve_weighted(double lambda, double delta, const CostFunction& cost,
                           DelayModel model) {
  validate_lambda(lambda);
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    fail(ErrorCode::kValidation, "delta must be positive and finite");
  }
  // Past hi the cost increase alone exceeds delta >= any QoS saving.
  const double base = cost(0.0, lambda);
  double hi = 1.0;
  while (hi < kBetaCap && cost(hi, lambda) - base < delta) hi = std::min(2.0 * hi, kBetaCap);

  auto objective = [&](double beta) {
    return cost(beta, lambda) + delta * wait_probability_sqrt(beta, lambda, model);
  };
  const MinResult best = scan_then_golden(objective, 0.0, hi, 129, 1e-10);
  SolveReport report;
  report.lambda = lambda;
  report.beta = best.x;
  report.objective = best.value;
  report.bound_used = model;
  report.evaluations = best.evaluations;
  report.converged = best.converged;
  fill_staffing(report);
  return report;
}

std::vector<FrontierPoint> sweep_frontier(double lambda, std::span<const double> epsilons,
                                          const CostFunction& cost, DelayModel model) {
  validate_lambda(lambda);
  if (epsilons.empty()) fail(ErrorCode::kValidation, "epsilon grid is empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    validate_epsilon(epsilons[i]);
    if (i > 0 && !(epsilons[i] > epsilons[i - 1])) {
      fail(ErrorCode::kValidation, "epsilon grid must be strictly increasing");
    }
  }
  std::vector<FrontierPoint> points;
  points.reserve(epsilons.size());
  for (const double eps : epsilons) {
    FrontierPoint p;
    p.epsilon = eps;
    try {
      const SolveReport r = solve_constrained(lambda, eps, cost, model);
      p.beta = r.beta;
      p.n_continuous = r.n_continuous;
      p.n_integer = r.n_integer;
      p.cost = r.objective;
      p.wait_prob_exact = r.wait_prob_exact;
      p.wait_prob_bound = wait_probability_sqrt(r.beta, lambda, model);
      p.ok = r.converged;
      if (!r.converged) p.error = "bisection did not converge";
    } catch (const Error& e) {
      p.ok = false;
      p.error = e.what();
    }
    points.push_back(std::move(p));
  }
  return points;
}

namespace {

std::string snap_buffer(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<double> epsilon_grid(double from, double to, double step) {
  if (!(step > 0.0)) fail(ErrorCode::kValidation, "epsilon step must be positive");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = from + i * step;
    if (v > to + 0.5 * step * 1e-6) break;
    // Snap to 12 significant digits so 0.05 + 18 * 0.05 becomes 0.95.
    grid.push_back(v == 0.0 ? 0.0 : std::stod(snap_buffer(v)));
  }
  return grid;
}

}  // namespace staffing
