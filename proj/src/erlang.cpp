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

#include "staffing/erlang.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "staffing/error.hpp"
#include "staffing/normal.hpp"

namespace staffing {
namespace {

// Integrand mass below exp(-kLogCutoff) of the peak is dropped.
constexpr double kLogCutoff = 60.0;
constexpr double kQuadTolerance = 1e-11;
constexpr unsigned kQuadMaxDepth = 12;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    fail(ErrorCode::kDomain, std::string(name) + " must be positive and finite, got " +
                                 std::to_string(value));
  }
}

// h(t) = ln t - lambda t + (n - 1) ln(1 + t), concave for n >= 1. Around
// the mode the linear terms cancel exactly (h'(mode) = 0), leaving
// h(mode + s) - h(mode) = log1pmx(s / mode) + (n - 1) log1pmx(s / (1 + mode)),
// which is free of the lambda * s cancellation.
// log(1 + x) - x without cancellation for small |x|. With z = x / (2 + x),
// log(1 + x) = 2 atanh z and 2z - x = -x^2 / (2 + x).
double log1pmx(double x) {
  if (std::abs(x) > 0.25) return std::log1p(x) - x;
  const double z = x / (2.0 + x);
  const double z2 = z * z;
  double power = z * z2;
  double series = 0.0;
  for (int k = 3; k < 40; k += 2) {
    const double term = power / k;
    series += term;
    if (std::abs(term) <= 1e-17 * std::abs(series)) break;
    power *= z2;
  }
  return -x * x / (2.0 + x) + 2.0 * series;
}

struct LogIntegrand {
  double servers;
  double lambda;
  double mode;
  double operator()(double t) const {
    return std::log(t) - lambda * t + (servers - 1.0) * std::log1p(t);
  }
  double offset(double s) const {
    return log1pmx(s / mode) +
           (servers - 1.0) * log1pmx(s / (1.0 + mode));
  }
};

// Continuous Erlang-C for servers > lambda > 0 without the n >= 1 check.
double continuous_unchecked(double servers, double lambda) {
  const double gap = servers - lambda;
  // Stationary point of h: lambda t^2 - (n - lambda) t - 1 = 0.
  const double mode = (gap + std::sqrt(gap * gap + 4.0 * lambda)) / (2.0 * lambda);
  const LogIntegrand h{servers, lambda, mode};
  const double h_mode = h(mode);
  const double curvature =
      1.0 / (mode * mode) + (servers - 1.0) / ((1.0 + mode) * (1.0 + mode));
  const double width = 1.0 / std::sqrt(std::abs(curvature));

  double right = width;
  while (h.offset(right) > -kLogCutoff) right *= 2.0;
  double left = std::min(width, mode);
  while (left < mode && h.offset(-left) > -kLogCutoff) left = std::min(2.0 * left, mode);

  auto scaled = [&](double s) {
    if (s <= -mode) return 0.0;
    return std::exp(h.offset(s));
  };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double total = Quad::integrate(scaled, -left, 0.0, kQuadMaxDepth, kQuadTolerance) +
                       Quad::integrate(scaled, 0.0, right, kQuadMaxDepth, kQuadTolerance);
  if (!(total > 0.0) || !std::isfinite(total)) {
    fail(ErrorCode::kNonConvergence,
         "continuous Erlang-C quadrature failed at n=" + std::to_string(servers) +
             ", lambda=" + std::to_string(lambda) + " (mode=" + std::to_string(mode) +
             ", integral=" + std::to_string(total) + ")");
  }
  const double log_alpha = -(std::log(lambda) + h_mode + std::log(total));
  return std::min(1.0, std::exp(log_alpha));
}

// -2n(1 - rho + ln rho) with the cancellation near rho = 1 removed.
double a_squared(double servers, double lambda) {
  const double x = (servers - lambda) / servers;  // 1 - rho
  if (std::abs(x) < 1e-6) {
    return servers * x * x * (1.0 + x * (2.0 / 3.0 + x * 0.5));
  }
  return -2.0 * servers * (x + std::log1p(-x));
}

BoundPair bounds_unchecked(double servers, double lambda) {
  const HWQuantities q = hw_quantities(servers, lambda);
  const double sqrt_n = std::sqrt(servers);
  const double core = q.rho + q.gamma * (cdf_pdf_ratio(q.a) + 2.0 / (3.0 * sqrt_n));
  const double extra = q.gamma * inverse_normal_pdf(q.a) / (12.0 * servers - 1.0);
  BoundPair b;
  b.upper = 1.0 / core;
  b.lower = 1.0 / (core + extra);
  return b;
}

}  // namespace

std::string_view to_string(DelayModel model) {
  switch (model) {
    case DelayModel::kExact: return "exact";
    case DelayModel::kJvlzUpper: return "jvlz-upper";
    case DelayModel::kJvlzLower: return "jvlz-lower";
    case DelayModel::kHalfinWhitt: return "halfin-whitt";
  }
  return "exact";
}

DelayModel parse_delay_model(std::string_view text) {
  if (text == "exact") return DelayModel::kExact;
  if (text == "upper" || text == "jvlz-upper") return DelayModel::kJvlzUpper;
  if (text == "lower" || text == "jvlz-lower") return DelayModel::kJvlzLower;
  if (text == "hw" || text == "halfin-whitt") return DelayModel::kHalfinWhitt;
  fail(ErrorCode::kValidation, "unknown bound '" + std::string(text) +
                                   "' (expected exact|upper|lower|hw)");
}

double erlang_c_exact(std::int64_t servers, double lambda) {
  require_positive(lambda, "lambda");
  if (servers < 1) fail(ErrorCode::kDomain, "servers must be >= 1");
  const double n = static_cast<double>(servers);
  if (lambda >= n) {
    fail(ErrorCode::kUnstable, "unstable system: lambda=" + std::to_string(lambda) +
                                   " >= n=" + std::to_string(servers));
  }
  // 1/B(k) = 1 + (k / lambda) / B(k-1), B(0) = 1.
  double inv_blocking = 1.0;
  for (std::int64_t k = 1; k <= servers; ++k) {
    inv_blocking = 1.0 + inv_blocking * (static_cast<double>(k) / lambda);
    if (std::isinf(inv_blocking)) return 0.0;
  }
  const double blocking = 1.0 / inv_blocking;
  const double rho = lambda / n;
  return blocking / (1.0 - rho * (1.0 - blocking));
}

double erlang_c_continuous(double servers, double lambda) {
  require_positive(lambda, "lambda");
  if (!(servers >= 1.0) || !std::isfinite(servers)) {
    fail(ErrorCode::kDomain, "servers must be >= 1, got " + std::to_string(servers));
  }
  if (servers <= lambda) {
    fail(ErrorCode::kDomain, "continuous Erlang-C needs servers > lambda (n=" +
                                 std::to_string(servers) + ", lambda=" +
                                 std::to_string(lambda) + ")");
  }
  return continuous_unchecked(servers, lambda);
}

double erlang_c_sqrt(double beta, double lambda) {
  require_positive(beta, "beta");
  require_positive(lambda, "lambda");
  return erlang_c_continuous(sqrt_staffing(beta, lambda), lambda);
}

double halfin_whitt(double beta) {
  require_positive(beta, "beta");
  return 1.0 / (1.0 + beta * cdf_pdf_ratio(beta));
}

HWQuantities hw_quantities(double servers, double lambda) {
  require_positive(lambda, "lambda");
  require_positive(servers, "servers");
  HWQuantities q;
  q.rho = lambda / servers;
  q.beta = (servers - lambda) / std::sqrt(lambda);
  q.gamma = (servers - lambda) / std::sqrt(servers);
  q.a = std::sqrt(std::max(0.0, a_squared(servers, lambda)));
  return q;
}

BoundPair jvlz_bounds(double beta, double lambda) {
  require_positive(beta, "beta");
  require_positive(lambda, "lambda");
  return bounds_unchecked(sqrt_staffing(beta, lambda), lambda);
}

BoundPair jvlz_bounds_at(double servers, double lambda) {
  require_positive(lambda, "lambda");
  if (!(servers > lambda) || !std::isfinite(servers)) {
    fail(ErrorCode::kDomain, "JVLZ bounds need servers > lambda");
  }
  return bounds_unchecked(servers, lambda);
}

double wait_probability(double servers, double lambda, DelayModel model) {
  require_positive(lambda, "lambda");
  if (std::isnan(servers)) fail(ErrorCode::kDomain, "servers is NaN");
  if (servers <= lambda) return 1.0;
  if (std::isinf(servers)) return 0.0;
  switch (model) {
    case DelayModel::kExact: return continuous_unchecked(servers, lambda);
    case DelayModel::kJvlzUpper: return bounds_unchecked(servers, lambda).upper;
    case DelayModel::kJvlzLower: return bounds_unchecked(servers, lambda).lower;
    case DelayModel::kHalfinWhitt:
      return 1.0 / (1.0 + ((servers - lambda) / std::sqrt(lambda)) *
                              cdf_pdf_ratio((servers - lambda) / std::sqrt(lambda)));
  }
  return 1.0;
}

double wait_probability_sqrt(double beta, double lambda, DelayModel model) {
  if (!(beta >= 0.0)) fail(ErrorCode::kDomain, "beta must be >= 0");
  require_positive(lambda, "lambda");
  if (beta == 0.0) return 1.0;
  return wait_probability(sqrt_staffing(beta, lambda), lambda, model);
}

double a_expansion(double beta, double lambda) {
  require_positive(lambda, "lambda");
  return beta - beta * beta / (6.0 * std::sqrt(lambda));
}

}  // namespace staffing
