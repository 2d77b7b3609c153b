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

#ifndef STAFFING_OPTIMIZE_HPP_
#define STAFFING_OPTIMIZE_HPP_

// One- and low-dimensional search routines shared by the staffing solvers.

#include <functional>
#include <span>
#include <vector>

namespace staffing {

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<double(std::span<const double>)>;

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  // f(x) - target
  int evaluations = 0;
  bool converged = false;
};

struct RootOptions {
  double lower = 0.0;
  double initial_upper = 8.0;
  double upper_cap = 64.0;
  double x_tolerance = 1e-10;
  double residual_tolerance = 1e-9;
  int max_steps = 200;
};

/// Smallest x in [lower, cap] with f(x) <= target for f non-increasing.
/// The upper end starts at initial_upper and doubles until f drops to the
/// target; throws kBracket if the cap is reached first. Returns the feasible
/// end of the final bracket.
RootResult solve_decreasing(const ScalarFn& f, double target, const RootOptions& options = {});

struct MinResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Golden-section search on [lo, hi].
MinResult golden_section(const ScalarFn& f, double lo, double hi, double x_tolerance = 1e-10,
                         int max_iterations = 200);

/// Samples `grid_points` equally spaced points on [lo, hi], then refines
/// the best sample by golden section within its neighbouring samples. Ties
/// on the grid go to the smallest x.
MinResult scan_then_golden(const ScalarFn& f, double lo, double hi, int grid_points = 65,
                           double x_tolerance = 1e-10);

struct DescentOptions {
  double improvement_tolerance = 1e-9;  // relative to max(1, |value|)
  int max_cycles = 200;
  int grid_points = 33;
  double x_tolerance = 1e-10;
};

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  int cycles = 0;
  bool converged = false;
};

/// Cyclic coordinate descent in the fixed order 0..L-1. Coordinate i stays
/// in [0, upper[i]]; each slice is minimised by scan_then_golden.
DescentResult coordinate_descent(const VectorFn& f, std::vector<double> start,
                                 std::span<const double> upper,
                                 const DescentOptions& options = {});

/// Minimises sum_i weights[i] * x[i] over x in [0, cap]^L subject to
/// g(x) >= target, where g is nondecreasing in every coordinate. The last
/// coordinate is eliminated by bisection onto the boundary g = target and the
/// rest are searched by coordinate descent. Throws kInfeasible if even
/// x = (cap, ..., cap) misses the target.
DescentResult minimize_linear_on_boundary(std::span<const double> weights, const VectorFn& g,
                                          double target, double cap = 64.0,
                                          const DescentOptions& options = {});

}  // namespace staffing

#endif  // STAFFING_OPTIMIZE_HPP_
