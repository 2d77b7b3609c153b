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

#ifndef STAFFING_FRONTIER_HPP_
#define STAFFING_FRONTIER_HPP_

// Single-station deterministic staffing: the wait-probability constrained
// model, its bound-based approximation, the weighted (dualized) model and
// efficient-frontier sweeps.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"

namespace staffing {

struct SolveReport {
  double lambda = 0.0;
  double beta = 0.0;
  double objective = 0.0;
  DelayModel bound_used = DelayModel::kExact;
  int evaluations = 0;
  bool converged = false;
  double residual = 0.0;  // constraint value minus epsilon (constrained models)
  double n_continuous = 0.0;
  std::int64_t n_integer = 0;  // ceil(n_continuous)
  double wait_prob_exact = 1.0;  // continuous Erlang-C at beta
};

/// Throws kValidation unless 0 < epsilon < 1.
void validate_epsilon(double epsilon);

/// min c(beta) s.t. w(beta, lambda) <= epsilon for any delay model. The
/// constraint is strictly decreasing in beta, so the optimum is the root of
/// w = epsilon.
SolveReport solve_constrained(double lambda, double epsilon, const CostFunction& cost,
                              DelayModel model);

/// Exact model: continuous Erlang-C constraint.
SolveReport solve_F(double lambda, double epsilon, const CostFunction& cost = {});

/// Bound-based approximation; `bound` must be kJvlzUpper or kJvlzLower.
/// With the upper bound the returned beta is feasible for solve_F.
SolveReport solve_G(double lambda, double epsilon, const CostFunction& cost = {},
                    DelayModel bound = DelayModel::kJvlzUpper);

/// min c(beta) + delta * w(beta, lambda) over beta >= 0.
SolveReport solve_weighted(double lambda, double delta, const CostFunction& cost = {},
                           DelayModel model = DelayModel::kExact);

struct FrontierPoint {
  double epsilon = 0.0;
  double beta = 0.0;
  double n_continuous = 0.0;
  std::int64_t n_integer = 0;
  double cost = 0.0;
  double wait_prob_exact = 0.0;
  double wait_prob_bound = 0.0;
  bool ok = false;
  std::string error;
};

/// One point per epsilon (strictly increasing, each in (0,1)). A failing
/// point is recorded with ok == false and the sweep continues.
std::vector<FrontierPoint> sweep_frontier(double lambda, std::span<const double> epsilons,
                                          const CostFunction& cost = {},
                                          DelayModel model = DelayModel::kExact);

/// from, from + step, ... up to `to` inclusive, snapped to 12 decimals.
std::vector<double> epsilon_grid(double from, double to, double step);

}  // namespace staffing

#endif  // STAFFING_FRONTIER_HPP_
