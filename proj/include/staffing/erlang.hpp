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

#ifndef STAFFING_ERLANG_HPP_
#define STAFFING_ERLANG_HPP_

// Delay probability of the M/M/n queue with unit service rate: the exact
// Erlang-C formula, its continuous extension in the number of servers, the
// Halfin-Whitt limit and the Janssen-van Leeuwaarden-Zwart (JVLZ) bounds.
//
// Every function here is pure and reentrant.

#include <cmath>
#include <cstdint>
#include <string_view>

namespace staffing {

/// Which delay-probability evaluator a solver should use.
enum class DelayModel {
  kExact,        // continuous Erlang-C
  kJvlzUpper,
  kJvlzLower,
  kHalfinWhitt,
};

std::string_view to_string(DelayModel model);
/// Accepts "exact", "upper", "lower", "hw" (and the long spellings).
DelayModel parse_delay_model(std::string_view text);

/// Halfin-Whitt regime quantities for `servers` servers and offered load
/// `lambda`. gamma == beta * sqrt(rho) and a >= 0 with a == 0 iff rho == 1.
struct HWQuantities {
  double rho = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double a = 0.0;
};

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

/// Square-root staffing level lambda + beta * sqrt(lambda).
inline double sqrt_staffing(double beta, double lambda) {
  return lambda + beta * std::sqrt(lambda);
}

/// P{Q >= n} for M/M/n. Uses the inverse Erlang-B recursion, so it is safe
/// for n up to millions. Throws kUnstable if lambda >= n.
double erlang_c_exact(std::int64_t servers, double lambda);

/// Continuous extension
///   1 / (lambda * int_0^inf t exp(-lambda t) (1+t)^(n-1) dt)
/// evaluated in log space. Requires servers >= 1 and servers > lambda.
double erlang_c_continuous(double servers, double lambda);

/// erlang_c_continuous(lambda + beta sqrt(lambda), lambda), beta > 0.
double erlang_c_sqrt(double beta, double lambda);

/// 1 / (1 + sqrt(2 pi) beta Phi(beta) exp(beta^2 / 2)), beta > 0.
double halfin_whitt(double beta);

HWQuantities hw_quantities(double servers, double lambda);

/// JVLZ bounds at square-root staffing n = lambda + beta sqrt(lambda).
BoundPair jvlz_bounds(double beta, double lambda);

/// JVLZ bounds at an explicit server count, servers > lambda.
BoundPair jvlz_bounds_at(double servers, double lambda);

/// Saturating evaluator used inside constraints and objectives: returns 1
/// when servers <= lambda (an overloaded or critically loaded station always
/// delays), otherwise the requested model at (servers, lambda).
double wait_probability(double servers, double lambda,
                        DelayModel model = DelayModel::kExact);

/// wait_probability at square-root staffing; beta == 0 gives 1.
double wait_probability_sqrt(double beta, double lambda,
                             DelayModel model = DelayModel::kExact);

/// Diagnostic two-term expansion a ~ beta - beta^2 / (6 sqrt(lambda)).
double a_expansion(double beta, double lambda);

}  // namespace staffing

#endif  // STAFFING_ERLANG_HPP_
