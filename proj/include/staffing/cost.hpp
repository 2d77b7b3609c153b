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

#ifndef STAFFING_COST_HPP_
#define STAFFING_COST_HPP_

#include <string_view>
#include <utility>
#include <vector>

namespace staffing {

/// Staffing cost as a function of the safety factor beta for a station whose
/// square-root staffing is anchored at rate `lambda`:
///   linear-in-beta     c * beta
///   linear-in-servers  c * (lambda + beta sqrt(lambda))
///   table              piecewise-linear through (beta, cost) knots,
///                      extended linearly past both ends
/// All three are continuous and strictly increasing in beta.
class CostFunction {
 public:
  enum class Kind { kLinearInBeta, kLinearInServers, kTable };

  static CostFunction linear_in_beta(double coefficient);
  static CostFunction linear_in_servers(double coefficient);
  /// Knots must have strictly increasing beta and cost; at least two.
  static CostFunction table(std::vector<std::pair<double, double>> knots);

  CostFunction() : CostFunction(linear_in_beta(1.0)) {}

  double operator()(double beta, double lambda) const;

  Kind kind() const { return kind_; }
  double coefficient() const { return coefficient_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

 private:
  CostFunction(Kind kind, double coefficient, std::vector<std::pair<double, double>> knots)
      : kind_(kind), coefficient_(coefficient), knots_(std::move(knots)) {}

  Kind kind_;
  double coefficient_;
  std::vector<std::pair<double, double>> knots_;
};

std::string_view to_string(CostFunction::Kind kind);
CostFunction::Kind parse_cost_kind(std::string_view text);

}  // namespace staffing

#endif  // STAFFING_COST_HPP_
