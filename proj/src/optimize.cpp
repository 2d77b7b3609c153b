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

#include "staffing/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "staffing/error.hpp"

namespace staffing {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // 1 / golden ratio

double sanitize(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

RootResult solve_decreasing(const ScalarFn& f, double target, const RootOptions& options) {
  RootResult out;
  auto eval = [&](double x) {
    ++out.evaluations;
    return f(x);
  };
  double lo = options.lower;
  const double f_lo = eval(lo);
  if (f_lo <= target) {
    out.x = lo;
    out.residual = f_lo - target;
    out.converged = true;
    return out;
  }
  double hi = std::min(std::max(options.initial_upper, lo), options.upper_cap);
  double f_hi = eval(hi);
  while (f_hi > target) {
    if (hi >= options.upper_cap) {
      char detail[128];
      std::snprintf(detail, sizeof detail, " %g (f(cap)=%.6g, target=%.6g)", options.upper_cap,
                    f_hi, target);
      fail(ErrorCode::kBracket, std::string("no root below the bracket cap") + detail);
    }
    lo = hi;
    hi = std::min(2.0 * hi, options.upper_cap);
    f_hi = eval(hi);
  }
  int steps = 0;
  while (hi - lo > options.x_tolerance && steps < options.max_steps) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eval(mid);
    if (f_mid <= target) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
    }
    ++steps;
  }
  out.x = hi;
  out.residual = f_hi - target;
  out.converged =
      hi - lo <= options.x_tolerance && std::abs(out.residual) <= options.residual_tolerance;
  return out;
}

MinResult golden_section(const ScalarFn& f, double lo, double hi, double x_tolerance,
                         int max_iterations) {
  MinResult out;
  auto eval = [&](double x) {
    ++out.evaluations;
    return sanitize(f(x));
  };
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  int it = 0;
  while (hi - lo > x_tolerance && it < max_iterations) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = eval(d);
    }
    ++it;
  }
  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  out.converged = hi - lo <= x_tolerance;
  return out;
}

MinResult scan_then_golden(const ScalarFn& f, double lo, double hi, int grid_points,
                           double x_tolerance) {
  MinResult best;
  if (!(hi > lo)) {
    best.x = lo;
    best.value = sanitize(f(lo));
    best.evaluations = 1;
    best.converged = true;
    return best;
  }
  grid_points = std::max(grid_points, 3);
  const double step = (hi - lo) / (grid_points - 1);
  int best_index = 0;
  best.value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * step;
    const double v = sanitize(f(x));
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.x = x;
      best_index = i;
    }
  }
  const double a = lo + std::max(best_index - 1, 0) * step;
  const double b = std::min(lo + (best_index + 1) * step, hi);
  MinResult refined = golden_section(f, a, b, x_tolerance);
  best.evaluations += refined.evaluations;
  if (refined.value < best.value) {
    best.x = refined.x;
    best.value = refined.value;
  }
  best.converged = refined.converged;
  return best;
}

DescentResult coordinate_descent(const VectorFn& f, std::vector<double> start,
                                 std::span<const double> upper,
                                 const DescentOptions& options) {
  DescentResult out;
  out.x = std::move(start);
  auto eval = [&](std::span<const double> x) {
    ++out.evaluations;
    return sanitize(f(x));
  };
  out.value = eval(out.x);
  std::vector<double> trial = out.x;
  for (out.cycles = 1; out.cycles <= options.max_cycles; ++out.cycles) {
    const double before = out.value;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
      trial = out.x;
      auto slice = [&](double t) {
        trial[i] = t;
        return eval(trial);
      };
      const MinResult r =
          scan_then_golden(slice, 0.0, upper[i], options.grid_points, options.x_tolerance);
      if (r.value < out.value) {
        out.x[i] = r.x;
        out.value = r.value;
      }
    }
    if (before - out.value < options.improvement_tolerance * std::max(1.0, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  out.cycles = std::min(out.cycles, options.max_cycles);
  return out;
}

DescentResult minimize_linear_on_boundary(std::span<const double> weights, const VectorFn& g,
                                          double target, double cap,
                                          const DescentOptions& options) {
  const std::size_t dims = weights.size();
  if (dims == 0) fail(ErrorCode::kDomain, "empty decision vector");
  int evaluations = 0;
  auto eval = [&](std::span<const double> x) {
    ++evaluations;
    return g(x);
  };

  std::vector<double> point(dims, cap);
  if (eval(point) < target) {
    fail(ErrorCode::kInfeasible, "constraint cannot reach " + std::to_string(target) +
                                     " even at the staffing cap");
  }
  std::fill(point.begin(), point.end(), 0.0);
  if (eval(point) >= target) {
    DescentResult out;
    out.x = point;
    out.value = 0.0;
    out.evaluations = evaluations;
    out.converged = true;
    return out;
  }

  RootOptions root;
  root.initial_upper = cap;
  root.upper_cap = cap;
  root.x_tolerance = 1e-12;
  root.residual_tolerance = std::numeric_limits<double>::infinity();

  // Smallest last coordinate that reaches the target, +inf if none does.
  std::vector<double> work(dims);
  auto resolve_last = [&](std::span<const double> prefix) {
    std::copy(prefix.begin(), prefix.end(), work.begin());
    work[dims - 1] = cap;
    if (eval(work) < target) return std::numeric_limits<double>::infinity();
    auto neg = [&](double t) {
      work[dims - 1] = t;
      return -eval(work);
    };
    return solve_decreasing(neg, -target, root).x;
  };

  // Start on the diagonal.
  auto diagonal = [&](double t) {
    std::fill(point.begin(), point.end(), t);
    return -eval(point);
  };
  const double t0 = solve_decreasing(diagonal, -target, root).x;

  DescentResult out;
  if (dims == 1) {
    out.x = {t0};
    out.value = weights[0] * t0;
    out.converged = true;
    out.evaluations = evaluations;
    return out;
  }

  auto phi = [&](std::span<const double> prefix) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < dims; ++i) total += weights[i] * prefix[i];
    return total + weights[dims - 1] * resolve_last(prefix);
  };
  std::vector<double> start(dims - 1, t0);
  const double start_value = phi(start);
  std::vector<double> upper(dims - 1);
  for (std::size_t i = 0; i + 1 < dims; ++i) {
    upper[i] = std::min(cap, start_value / weights[i]);
  }
  out = coordinate_descent(phi, start, upper, options);
  std::vector<double> prefix = out.x;
  out.x.push_back(resolve_last(prefix));
  out.evaluations = evaluations;
  return out;
}

}  // namespace staffing
