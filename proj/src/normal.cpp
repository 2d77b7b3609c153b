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

#include "staffing/normal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace staffing {
namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110452530069867406099;
// exp(x) overflows for x above this.
constexpr double kMaxExpArg = 709.78;

}  // namespace

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double inverse_normal_pdf(double x) {
  const double half_sq = 0.5 * x * x;
  if (half_sq > kMaxExpArg) return std::numeric_limits<double>::infinity();
  return kSqrt2Pi * std::exp(half_sq);
}

double cdf_pdf_ratio(double x) {
  // For large positive x, Phi(x) -> 1 and the ratio is just 1/phi(x); both
  // factors are finite until the exponential itself overflows.
  const double inv_pdf = inverse_normal_pdf(x);
  if (std::isinf(inv_pdf) && x < 0.0) {
    // Left tail: Phi(x)/phi(x) is the Mills ratio of -x, ~ 1/|x|.
    return 1.0 / (-x - 1.0 / (-x));
  }
  return normal_cdf(x) * inv_pdf;
}

}  // namespace staffing
