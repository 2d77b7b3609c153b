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

#ifndef STAFFING_MULTI_DET_HPP_
#define STAFFING_MULTI_DET_HPP_

// Weighted staffing of L independent stations with known arrival rates:
//   min_beta  sum_i c_i(beta_i) + delta * (1 - prod_i (1 - w_i(beta_i)))
// with w the continuous Erlang-C (exact) or the JVLZ upper bound.

#include <vector>

#include "staffing/cost.hpp"
#include "staffing/erlang.hpp"

namespace staffing {

struct MultiStationInstance {
  std::vector<double> lambdas;
  std::vector<CostFunction> costs;
  double delta = 1.0;

  std::size_t stations() const { return lambdas.size(); }
  /// Throws kValidation on empty, mismatched or non-positive data.
  void validate() const;
  /// Same instance with every rate multiplied by m.
  MultiStationInstance scaled(double m) const;
};

struct MultiSolveReport {
  std::vector<double> betas;
  double objective = 0.0;
  std::vector<double> per_station_wait;  // continuous Erlang-C at betas
  double joint_wait = 0.0;               // 1 - prod(1 - per_station_wait)
  DelayModel bound_used = DelayModel::kExact;
  int evaluations = 0;
  int cycles = 0;
  bool converged = false;
};

/// Objective at `betas` under `model` (f for kExact, g for kJvlzUpper).
double multi_objective(const MultiStationInstance& instance, const std::vector<double>& betas,
                       DelayModel model);

/// Cyclic coordinate descent from the decoupled single-station optimum
/// (weight delta / L per station). The result is a coordinate-wise minimum,
/// not a global certificate.
MultiSolveReport solve_multi(const MultiStationInstance& instance,
                             DelayModel model = DelayModel::kExact);

/// g(beta) - f(beta) >= 0.
double objective_gap(const MultiStationInstance& instance, const std::vector<double>& betas);

}  // namespace staffing

#endif  // STAFFING_MULTI_DET_HPP_
