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

#include "staffing/multi_det.hpp"

#include <cmath>
#include <string>

#include "staffing/error.hpp"
#include "staffing/frontier.hpp"
#include "staffing/optimize.hpp"

namespace staffing {
namespace {

constexpr double kBetaCap = 64.0;

}  // namespace

void MultiStationInstance::validate() const {
  if (lambdas.empty()) fail(ErrorCode::kValidation, "instance needs at least one station");
  if (costs.size() != lambdas.size()) {
    fail(ErrorCode::kValidation, "one cost function per station is required");
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || !std::isfinite(lambdas[i])) {
      fail(ErrorCode::kValidation, "station " + std::to_string(i) + " rate must be positive");
    }
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    fail(ErrorCode::kValidation, "delta must be positive");
  }
}

MultiStationInstance MultiStationInstance::scaled(double m) const {
  MultiStationInstance out = *this;
  for (double& l : out.lambdas) l *= m;
  return out;
}

double multi_objective(const MultiStationInstance& instance, const std::vector<double>& betas,
                       DelayModel model) {
  double cost = 0.0;
  double no_wait = 1.0;
  for (std::size_t i = 0; i < instance.stations(); ++i) {
    cost += instance.costs[i](betas[i], instance.lambdas[i]);
    no_wait *= 1.0 - wait_probability_sqrt(betas[i], instance.lambdas[i], model);
  }
  return cost + instance.delta * (1.0 - no_wait);
}

MultiSolveReport solve_multi(const MultiStationInstance& instance, DelayModel model) {
  instance.validate();
  const std::size_t count = instance.stations();
  std::vector<double> start(count);
  std::vector<double> upper(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double lambda = instance.lambdas[i];
    start[i] = solve_weighted(lambda, instance.delta / count, instance.costs[i], model).beta;
    // Raising beta_i past upper[i] costs more than the whole QoS term.
    const double base = instance.costs[i](0.0, lambda);
    double hi = 1.0;
    while (hi < kBetaCap && instance.costs[i](hi, lambda) - base < instance.delta) {
      hi = std::min(2.0 * hi, kBetaCap);
    }
    upper[i] = std::max(hi, start[i]);
  }
  const VectorFn objective = [&](std::span<const double> b) {
    return multi_objective(instance, std::vector<double>(b.begin(), b.end()), model);
  };
  const DescentResult descent = coordinate_descent(objective, start, upper);

  MultiSolveReport report;
  report.betas = descent.x;
  report.objective = descent.value;
  report.bound_used = model;
  report.evaluations = descent.evaluations;
  report.cycles = descent.cycles;
  report.converged = descent.converged;
  double no_wait = 1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double w = wait_probability_sqrt(report.betas[i], instance.lambdas[i]);
    report.per_station_wait.push_back(w);
    no_wait *= 1.0 - w;
  }
  report.joint_wait = 1.0 - no_wait;
  return report;
}

double objective_gap(const MultiStationInstance& instance, const std::vector<double>& betas) {
  instance.validate();
  if (betas.size() != instance.stations()) {
    fail(ErrorCode::kValidation, "beta vector length does not match station count");
  }
  for (const double b : betas) {
    if (!(b >= 0.0)) fail(ErrorCode::kDomain, "beta must be >= 0");
  }
  return multi_objective(instance, betas, DelayModel::kJvlzUpper) -
         multi_objective(instance, betas, DelayModel::kExact);
}

}  // namespace staffing
