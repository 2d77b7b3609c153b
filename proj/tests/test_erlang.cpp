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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "staffing/erlang.hpp"
#include "staffing/error.hpp"
#include "staffing/normal.hpp"

using namespace staffing;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> beta_grid(double lo, double hi, int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * i / (points - 1));
  return g;
}

}  // namespace

TEST_SUITE("erlang") {

TEST_CASE("exact Erlang-C hand values") {
  CHECK(erlang_c_exact(1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(erlang_c_exact(2, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exact Erlang-C matches closed-form summation") {
  for (std::int64_t n : {1, 2, 3, 5, 10, 37, 100, 250, 600}) {
    for (double load : {0.3, 0.7, 0.95, 0.999}) {
      const double lambda = load * static_cast<double>(n);
      const double got = erlang_c_exact(n, lambda);
      const double want = static_cast<double>(oracle::erlang_c(n, lambda));
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(rel_err(got, want) < 1e-12);
    }
  }
}

TEST_CASE("exact Erlang-C stays finite for very large n") {
  const double v = erlang_c_exact(2'000'000, 1'999'000.0);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(std::isfinite(v));
  // Deep in the lightly loaded range the recursion underflows cleanly to 0.
  CHECK(erlang_c_exact(5000, 10.0) == 0.0);
}

TEST_CASE("exact Erlang-C rejects bad input") {
  CHECK_THROWS_AS(erlang_c_exact(5, 5.0), Error);
  try {
    erlang_c_exact(5, 6.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnstable);
  }
  try {
    erlang_c_exact(0, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
  CHECK_THROWS_AS(erlang_c_exact(3, -1.0), Error);
  CHECK_THROWS_AS(erlang_c_exact(3, std::nan("")), Error);
}

TEST_CASE("continuous extension interpolates integers") {
  double worst = 0.0;
  for (std::int64_t n = 2; n <= 200; ++n) {
    const double lambda = 0.9 * static_cast<double>(n);
    worst = std::max(worst, rel_err(erlang_c_continuous(static_cast<double>(n), lambda),
                                    erlang_c_exact(n, lambda)));
  }
  CHECK(worst < 1e-8);
  CHECK(erlang_c_continuous(2.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("continuous extension matches a direct integral at real n") {
  struct Point {
    double n, lambda;
  };
  for (const Point p : {Point{1.5, 0.7}, Point{2.5, 1.3}, Point{10.7, 8.2}, Point{120.3, 110.0},
                        Point{495.618, 450.0}}) {
    const double want = static_cast<double>(oracle::erlang_c_integral(p.n, p.lambda));
    CAPTURE(p.n);
    CHECK(rel_err(erlang_c_continuous(p.n, p.lambda), want) < 1e-8);
  }
}

TEST_CASE("continuous extension works where the raw integrand overflows") {
  for (double lambda : {700.0, 5e3, 1e5, 1e6}) {
    const double v = erlang_c_sqrt(1.0, lambda);
    CAPTURE(lambda);
    CHECK(v > 0.2);
    CHECK(v < 0.26);
  }
}

TEST_CASE("continuous extension is strictly decreasing in n") {
  const double lambda = 100.0;
  double previous = 2.0;
  for (double n = lambda + 1.0; n <= lambda + 50.0; n += 0.25) {
    const double v = erlang_c_continuous(n, lambda);
    REQUIRE(v < previous);
    previous = v;
  }
}

TEST_CASE("continuous extension domain") {
  CHECK_THROWS_AS(erlang_c_continuous(0.5, 0.2), Error);
  CHECK_THROWS_AS(erlang_c_continuous(10.0, 10.0), Error);
  CHECK_THROWS_AS(erlang_c_sqrt(0.0, 10.0), Error);
  CHECK(wait_probability(10.0, 10.0) == 1.0);
  CHECK(wait_probability(9.0, 10.0) == 1.0);
  CHECK(wait_probability_sqrt(0.0, 10.0) == 1.0);
}

TEST_CASE("square-root staffing near zero safety saturates") {
  CHECK(erlang_c_sqrt(1e-6, 100.0) > 0.999);
  CHECK(jvlz_bounds(1e-6, 100.0).upper > 0.999);
  CHECK(halfin_whitt(1e-8) > 0.9999);
}

TEST_CASE("Halfin-Whitt limit") {
  // Frozen from the erfc oracle.
  CHECK(halfin_whitt(1.0) == doctest::Approx(0.2233612747982607).epsilon(1e-13));
  for (double beta : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    CHECK(halfin_whitt(beta) ==
          doctest::Approx(static_cast<double>(oracle::halfin_whitt(beta))).epsilon(1e-13));
  }
  for (double beta : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(halfin_whitt(beta) - erlang_c_sqrt(beta, 1e6)) <= 1e-3);
  }
}

TEST_CASE("bound sandwich on a grid") {
  int violations = 0;
  for (double lambda : {1.0, 10.0, 100.0, 1e3, 1e4, 1e5}) {
    for (double beta : beta_grid(0.05, 5.0, 60)) {
      const BoundPair b = jvlz_bounds(beta, lambda);
      const double exact = erlang_c_sqrt(beta, lambda);
      if (!(b.lower <= exact && exact <= b.upper)) ++violations;
      if (!(b.lower > 0.0 && b.upper <= 1.0 + 1e-12)) ++violations;
    }
  }
  CHECK(violations == 0);
  const BoundPair b = jvlz_bounds(5.0, 1e4);
  CHECK(b.lower <= erlang_c_sqrt(5.0, 1e4));
  CHECK(erlang_c_sqrt(5.0, 1e4) <= b.upper);
}

TEST_CASE("bound gap shrinks uniformly as lambda grows") {
  double previous = 1.0;
  for (double lambda : {1e2, 1e3, 1e4, 1e5}) {
    double worst = 0.0;
    for (double beta : beta_grid(0.01, 5.0, 200)) {
      const BoundPair b = jvlz_bounds(beta, lambda);
      worst = std::max(worst, b.upper - b.lower);
    }
    CAPTURE(lambda);
    CHECK(worst < previous);
    previous = worst;
  }
  CHECK(previous < 1e-3);
}

TEST_CASE("upper bound decreases in lambda at fixed beta") {
  for (double beta : {0.5, 1.0, 2.0}) {
    double previous = 2.0;
    for (double lambda : {5.0, 10.0, 50.0, 100.0, 1e3, 1e4, 1e5}) {
      const double ub = jvlz_bounds(beta, lambda).upper;
      CHECK(ub < previous);
      previous = ub;
    }
  }
}

TEST_CASE("upper bound and exact value decrease in beta") {
  for (double lambda : {10.0, 100.0, 1e4}) {
    double prev_ub = 2.0;
    double prev_exact = 2.0;
    for (double beta : beta_grid(0.05, 5.0, 100)) {
      const double ub = jvlz_bounds(beta, lambda).upper;
      const double ex = erlang_c_sqrt(beta, lambda);
      CHECK(ub < prev_ub);
      CHECK(ex < prev_exact);
      prev_ub = ub;
      prev_exact = ex;
    }
  }
}

TEST_CASE("correction term gamma / (12n - 1) vanishes") {
  auto worst = [](double lambda) {
    double w = 0.0;
    for (double beta : beta_grid(0.05, 5.0, 100)) {
      const double n = sqrt_staffing(beta, lambda);
      w = std::max(w, hw_quantities(n, lambda).gamma / (12.0 * n - 1.0));
    }
    return w;
  };
  CHECK(worst(1e4) < worst(1e2));
  CHECK(worst(1e4) < 1e-3);
}

TEST_CASE("Halfin-Whitt quantities") {
  const HWQuantities q = hw_quantities(110.0, 100.0);
  CHECK(q.rho == doctest::Approx(100.0 / 110.0));
  CHECK(q.beta == doctest::Approx(1.0));
  CHECK(q.gamma == doctest::Approx(q.beta * std::sqrt(q.rho)));
  CHECK(q.a > 0.0);
  // The series branch near rho = 1 joins the direct formula continuously.
  const double n = 1e6;
  const double a_series = hw_quantities(n, n - 0.9).a;
  const double a_direct = hw_quantities(n, n - 1.1).a;
  CHECK(a_series > 0.0);
  CHECK(a_direct > a_series);
  CHECK(a_direct / a_series == doctest::Approx(1.1 / 0.9).epsilon(1e-4));
  CHECK(hw_quantities(50.0, 50.0).a == 0.0);
  // Two-term expansion of a tracks the exact value.
  for (double lambda : {1e2, 1e4}) {
    const HWQuantities qq = hw_quantities(sqrt_staffing(1.5, lambda), lambda);
    CHECK(std::abs(qq.a - a_expansion(1.5, lambda)) < 2.0 / lambda);
  }
}

TEST_CASE("normal helpers") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(-40.0) > 0.0 - 1e-300);
  CHECK(cdf_pdf_ratio(0.0) == doctest::Approx(std::sqrt(2.0 * M_PI) / 2.0));
  CHECK(std::isinf(cdf_pdf_ratio(40.0)));
  CHECK(std::isfinite(cdf_pdf_ratio(30.0)));
  CHECK(normal_pdf(1.0) * inverse_normal_pdf(1.0) == doctest::Approx(1.0));
}

TEST_CASE("all delay models stay in (0, 1]") {
  for (DelayModel m : {DelayModel::kExact, DelayModel::kJvlzUpper, DelayModel::kJvlzLower,
                       DelayModel::kHalfinWhitt}) {
    for (double lambda : {0.5, 10.0, 1e3}) {
      for (double beta : beta_grid(0.01, 6.0, 40)) {
        const double v = wait_probability_sqrt(beta, lambda, m);
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("delay model names round-trip") {
  for (DelayModel m : {DelayModel::kExact, DelayModel::kJvlzUpper, DelayModel::kJvlzLower,
                       DelayModel::kHalfinWhitt}) {
    CHECK(parse_delay_model(to_string(m)) == m);
  }
  CHECK(parse_delay_model("upper") == DelayModel::kJvlzUpper);
  CHECK(parse_delay_model("hw") == DelayModel::kHalfinWhitt);
  CHECK_THROWS_AS(parse_delay_model("bogus"), Error);
}

}  // TEST_SUITE
