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

#ifndef STAFFING_TESTS_ORACLES_HPP_
#define STAFFING_TESTS_ORACLES_HPP_

// Slow, independent reference computations. Nothing here shares code with
// the library.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

// Erlang-C from the closed form, terms summed in long double log space.
inline long double erlang_c(std::int64_t n, long double lambda) {
  std::vector<long double> logs;
  logs.reserve(static_cast<std::size_t>(n) + 1);
  long double log_term = 0.0L;
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) log_term += std::log(lambda) - std::log(static_cast<long double>(k));
    logs.push_back(log_term);
  }
  const long double top = logs.back();
  long double sum = 0.0L;
  for (const long double l : logs) sum += std::exp(l - top);
  const long double blocking = 1.0L / sum;
  const long double rho = lambda / static_cast<long double>(n);
  return blocking / (1.0L - rho * (1.0L - blocking));
}

// 1 / (lambda * int_0^inf t e^{-lambda t} (1+t)^{n-1} dt) by composite
// Simpson on a fixed grid around the integrand peak.
inline long double erlang_c_integral(long double n, long double lambda, int panels = 200000) {
  auto log_f = [&](long double t) {
    return std::log(t) - lambda * t + (n - 1.0L) * std::log1p(t);
  };
  const long double gap = n - lambda;
  const long double mode = (gap + std::sqrt(gap * gap + 4.0L * lambda)) / (2.0L * lambda);
  const long double peak = log_f(mode);
  long double hi = mode;
  while (log_f(hi) - peak > -80.0L) hi = hi * 1.5L + 1e-3L;
  const long double lo = 0.0L;
  const long double h = (hi - lo) / panels;
  long double sum = 0.0L;
  for (int i = 0; i <= panels; ++i) {
    const long double t = lo + h * i;
    const long double f = t <= 0.0L ? 0.0L : std::exp(log_f(t) - peak);
    const int w = (i == 0 || i == panels) ? 1 : (i % 2 == 1 ? 4 : 2);
    sum += w * f;
  }
  const long double integral = sum * h / 3.0L;
  return 1.0L / (lambda * integral * std::exp(peak));
}

// Halfin-Whitt limit with Phi from erfc.
inline long double halfin_whitt(long double beta) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double phi_cdf = 0.5L * std::erfc(-beta / std::sqrt(2.0L));
  return 1.0L / (1.0L + std::sqrt(2.0L * pi) * beta * phi_cdf * std::exp(beta * beta / 2.0L));
}

// P(at least one event) for independent events, by inclusion-exclusion.
inline double union_probability(const std::vector<double>& p) {
  const std::size_t l = p.size();
  double total = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << l); ++mask) {
    double term = 1.0;
    int bits = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (std::size_t{1} << i)) {
        term *= p[i];
        ++bits;
      }
    }
    total += (bits % 2 == 1) ? term : -term;
  }
  return total;
}

struct GridMin {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

inline GridMin grid_min(const std::function<double(double)>& f, double lo, double hi,
                        double step) {
  GridMin best;
  for (double x = lo; x <= hi + 1e-12; x += step) {
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

}  // namespace oracle

#endif  // STAFFING_TESTS_ORACLES_HPP_
