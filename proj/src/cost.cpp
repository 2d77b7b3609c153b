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

#include "staffing/cost.hpp"

#include <cmath>
#include <string>

#include "staffing/erlang.hpp"
#include "staffing/error.hpp"

namespace staffing {

CostFunction CostFunction::linear_in_beta(double coefficient) {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    fail(ErrorCode::kValidation, "cost coefficient must be positive");
  }
  return CostFunction(Kind::kLinearInBeta, coefficient, {});
}

CostFunction CostFunction::linear_in_servers(double coefficient) {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    fail(ErrorCode::kValidation, "cost coefficient must be positive");
  }
  return CostFunction(Kind::kLinearInServers, coefficient, {});
}

CostFunction CostFunction::table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) fail(ErrorCode::kValidation, "cost table needs at least two knots");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first) || !(knots[i].second > knots[i - 1].second)) {
      fail(ErrorCode::kValidation,
           "cost table must be strictly increasing in beta and cost (knot " +
               std::to_string(i) + ")");
    }
  }
  return CostFunction(Kind::kTable, 0.0, std::move(knots));
}

double CostFunction::operator()(double beta, double lambda) const {
  switch (kind_) {
    case Kind::kLinearInBeta: return coefficient_ * beta;
    case Kind::kLinearInServers: return coefficient_ * sqrt_staffing(beta, lambda);
    case Kind::kTable: {
      std::size_t hi = 1;
      while (hi + 1 < knots_.size() && beta > knots_[hi].first) ++hi;
      const auto& [x0, y0] = knots_[hi - 1];
      const auto& [x1, y1] = knots_[hi];
      return y0 + (y1 - y0) * (beta - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

std::string_view to_string(CostFunction::Kind kind) {
  switch (kind) {
    case CostFunction::Kind::kLinearInBeta: return "linear-in-beta";
    case CostFunction::Kind::kLinearInServers: return "linear-in-servers";
    case CostFunction::Kind::kTable: return "table";
  }
  return "linear-in-beta";
}

CostFunction::Kind parse_cost_kind(std::string_view text) {
  if (text == "linear-in-beta") return CostFunction::Kind::kLinearInBeta;
  if (text == "linear-in-servers") return CostFunction::Kind::kLinearInServers;
  if (text == "table" || text == "user-table") return CostFunction::Kind::kTable;
  fail(ErrorCode::kValidation, "unknown cost kind '" + std::string(text) + "'");
}

}  // namespace staffing
