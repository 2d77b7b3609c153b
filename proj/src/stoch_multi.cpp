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

#include "staffing/stoch_multi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "staffing/error.hpp"
#include "staffing/frontier.hpp"
#include "staffing/optimize.hpp"
#include "staffing/stoch_single.hpp"

namespace staffing {
namespace {

constexpr double kBetaCap = 64.0;

// The joint models compare against 1 - epsilon, which is exactly 1 in double
// precision once epsilon drops below half an ulp of 1.
void validate_joint_epsilon(double epsilon) {
  validate_epsilon(epsilon);
  if (1.0 - epsilon == 1.0) {
    char text[32];
    std::snprintf(text, sizeof text, "%g", epsilon);
    fail(ErrorCode::kValidation, std::string("epsilon ") + text +
                                     " is below the resolution of the no-wait target 1 - epsilon");
  }
}
constexpr double kCostTolerance = 1e-9;

void validate_prices(const JointScenarioSet& scenarios, std::span<const double> prices) {
  if (prices.size() != scenarios.stations()) {
    fail(ErrorCode::kValidation, "need one price per station (" +
                                     std::to_string(scenarios.stations()) + "), got " +
                                     std::to_string(prices.size()));
  }
  for (const double c : prices) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      fail(ErrorCode::kValidation, "station prices must be positive and finite");
    }
  }
}

void validate_key(const JointScenarioSet& scenarios, const KeyVector& key) {
  if (key.size() != scenarios.stations()) {
    fail(ErrorCode::kValidation, "key vector length differs from station count");
  }
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] >= scenarios.levels(i).size()) {
      fail(ErrorCode::kValidation, "key level out of range at station " + std::to_string(i));
    }
  }
}

std::string key_text(const KeyVector& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(key[i]);
  }
  return out + ")";
}

// factors[i][level] -> sum_w p_w prod_i factors[i][level_of(w, i)].
double combine(const JointScenarioSet& scenarios,
               const std::vector<std::vector<double>>& factors) {
  double total = 0.0;
  for (std::size_t w = 0; w < scenarios.size(); ++w) {
    double term = scenarios[w].probability;
    for (std::size_t i = 0; i < scenarios.stations() && term != 0.0; ++i) {
      term *= factors[i][scenarios.level_of(w, i)];
    }
    total += term;
  }
  return total;
}

double integer_no_wait(std::int64_t servers, double rate) {
  if (static_cast<double>(servers) <= rate) return 0.0;
  return 1.0 - erlang_c_exact(servers, rate);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

double integer_cost(std::span<const double> prices, std::span<const std::int64_t> n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) total += prices[i] * static_cast<double>(n[i]);
  return total;
}

JointDecision start_decision(const JointScenarioSet& scenarios, const KeyVector& key,
                             std::string method) {
  JointDecision d;
  d.method = std::move(method);
  d.key = key;
  for (std::size_t i = 0; i < key.size(); ++i) d.key_rates.push_back(scenarios.levels(i)[key[i]]);
  return d;
}

void finalize(JointDecision& d, const JointScenarioSet& scenarios,
              std::span<const double> prices) {
  d.n_continuous.clear();
  d.n_integer.clear();
  for (std::size_t i = 0; i < d.betas.size(); ++i) {
    d.n_continuous.push_back(sqrt_staffing(d.betas[i], d.key_rates[i]));
    d.n_integer.push_back(std::max<std::int64_t>(1, std::llround(d.n_continuous.back())));
  }
  d.cost = integer_cost(prices, d.n_integer);
  d.continuous_cost = dot(prices, d.n_continuous);
  d.achieved_no_wait = joint_constraint_value(scenarios, d.n_integer);
  d.expected_union_wait = 1.0 - d.achieved_no_wait;
}

std::vector<double> boundary_weights(std::span<const double> prices,
                                     const std::vector<double>& key_rates, CostBasis basis) {
  std::vector<double> w(prices.begin(), prices.end());
  if (basis == CostBasis::kServers) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= std::sqrt(key_rates[i]);
  }
  return w;
}

// Cheapest point of the constraint boundary in beta space.
void solve_on_boundary(JointDecision& d, std::span<const double> prices, CostBasis basis,
                       double target, const VectorFn& g) {
  const std::vector<double> weights = boundary_weights(prices, d.key_rates, basis);
  DescentResult r;
  try {
    r = minimize_linear_on_boundary(weights, g, target, kBetaCap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
    fail(ErrorCode::kInfeasible, "key " + key_text(d.key) + " is infeasible: " + e.what());
  }
  d.betas = r.x;
  d.objective = dot(weights, r.x);
  d.model_no_wait = g(r.x);
  d.evaluations = r.evaluations;
  d.converged = r.converged;
}

// Exact no-wait probabilities 1 - C(n, rate) for n = 0..n_max, 0 when unstable.
std::vector<double> no_wait_column(double rate, std::int64_t n_max) {
  std::vector<double> column(static_cast<std::size_t>(n_max) + 1, 0.0);
  double inv_blocking = 1.0;
  for (std::int64_t k = 1; k <= n_max; ++k) {
    inv_blocking = 1.0 + inv_blocking * (static_cast<double>(k) / rate);
    const double n = static_cast<double>(k);
    if (n <= rate) continue;
    if (std::isinf(inv_blocking)) {
      std::fill(column.begin() + k, column.end(), 1.0);
      break;
    }
    const double blocking = 1.0 / inv_blocking;
    column[k] = 1.0 - blocking / (1.0 - (rate / n) * (1.0 - blocking));
  }
  return column;
}

class LatticeSearch {
 public:
  LatticeSearch(const JointScenarioSet& scenarios, std::span<const double> prices, double target)
      : scenarios_(scenarios), prices_(prices), target_(target), tables_(scenarios.stations()) {}

  void build_tables(const std::vector<std::int64_t>& upper) {
    for (std::size_t i = 0; i < scenarios_.stations(); ++i) {
      tables_[i].clear();
      for (const double rate : scenarios_.levels(i)) {
        tables_[i].push_back(no_wait_column(rate, upper[i]));
      }
    }
  }

  bool feasible(const std::vector<std::int64_t>& n) const {
    double total = 0.0;
    for (std::size_t w = 0; w < scenarios_.size(); ++w) {
      double term = scenarios_[w].probability;
      for (std::size_t i = 0; i < n.size() && term != 0.0; ++i) {
        term *= tables_[i][scenarios_.level_of(w, i)][static_cast<std::size_t>(n[i])];
      }
      total += term;
    }
    return total >= target_;
  }

  // Smallest n[i] in [lo, hi] keeping `n` feasible, or nullopt.
  std::optional<std::int64_t> smallest(std::vector<std::int64_t>& n, std::size_t i,
                                       std::int64_t lo, std::int64_t hi) const {
    if (hi < lo) return std::nullopt;
    n[i] = hi;
    if (!feasible(n)) return std::nullopt;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      n[i] = mid;
      if (feasible(n)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    n[i] = hi;
    return hi;
  }

  void search(std::size_t i, double partial, std::vector<std::int64_t>& n) {
    const std::size_t last = n.size() - 1;
    if (i == last) {
      ++visited;
      const auto hi = static_cast<std::int64_t>(
          std::floor((best_cost - partial) / prices_[last] + kCostTolerance));
      const auto v = smallest(n, last, lower[last], std::min(hi, upper[last]));
      if (!v) return;
      const double c = partial + prices_[last] * static_cast<double>(*v);
      if (c < best_cost - kCostTolerance ||
          (c <= best_cost + kCostTolerance && n < best)) {
        best_cost = c;
        best = n;
      }
      return;
    }
    double rest = 0.0;
    for (std::size_t j = i + 1; j < n.size(); ++j) rest += prices_[j] * lower[j];
    for (std::int64_t v = lower[i]; v <= upper[i]; ++v) {
      const double pc = partial + prices_[i] * static_cast<double>(v);
      if (pc + rest > best_cost + kCostTolerance) break;
      n[i] = v;
      search(i + 1, pc, n);
    }
  }

  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> best;
  double best_cost = 0.0;
  std::int64_t visited = 0;

 private:
  const JointScenarioSet& scenarios_;
  std::span<const double> prices_;
  double target_;
  std::vector<std::vector<std::vector<double>>> tables_;
};

std::vector<std::int64_t> feasible_incumbent(const JointScenarioSet& scenarios, double epsilon,
                                             std::span<const double> prices) {
  const std::size_t L = scenarios.stations();
  std::vector<std::int64_t> n(L);
  try {
    n = solve_decoupled(scenarios, epsilon, prices).n_integer;
  } catch (const Error&) {
    for (std::size_t i = 0; i < L; ++i) {
      n[i] = static_cast<std::int64_t>(std::floor(scenarios.levels(i).back())) + 1;
    }
  }
  for (int step = 0; joint_constraint_value(scenarios, n) < 1.0 - epsilon; ++step) {
    if (step > 200) fail(ErrorCode::kInfeasible, "could not find a feasible integer staffing");
    for (auto& v : n) v += std::max<std::int64_t>(1, std::llround(std::sqrt(double(v))));
  }
  return n;
}

}  // namespace

double joint_constraint_value(const JointScenarioSet& scenarios,
                              std::span<const std::int64_t> servers) {
  if (servers.size() != scenarios.stations()) {
    fail(ErrorCode::kValidation, "staffing vector length differs from station count");
  }
  std::vector<std::vector<double>> factors(servers.size());
  for (std::size_t i = 0; i < servers.size(); ++i) {
    if (servers[i] < 1) fail(ErrorCode::kDomain, "server counts must be >= 1");
    for (const double rate : scenarios.levels(i)) {
      factors[i].push_back(integer_no_wait(servers[i], rate));
    }
  }
  return combine(scenarios, factors);
}

double joint_no_wait(const JointScenarioSet& scenarios, std::span<const double> servers,
                     DelayModel model) {
  if (servers.size() != scenarios.stations()) {
    fail(ErrorCode::kValidation, "staffing vector length differs from station count");
  }
  std::vector<std::vector<double>> factors(servers.size());
  for (std::size_t i = 0; i < servers.size(); ++i) {
    for (const double rate : scenarios.levels(i)) {
      factors[i].push_back(1.0 - wait_probability(servers[i], rate, model));
    }
  }
  return combine(scenarios, factors);
}

double reduced_joint_no_wait(const JointScenarioSet& scenarios, const KeyVector& key,
                             std::span<const double> betas, DelayModel model) {
  validate_key(scenarios, key);
  std::vector<std::vector<double>> factors(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    const auto levels = scenarios.levels(i);
    factors[i].assign(levels.size(), 0.0);
    for (std::size_t l = 0; l < key[i]; ++l) factors[i][l] = 1.0;
    factors[i][key[i]] = 1.0 - wait_probability_sqrt(betas[i], levels[key[i]], model);
  }
  return combine(scenarios, factors);
}

double reduced_constant_terms(const JointScenarioSet& scenarios, const KeyVector& key) {
  validate_key(scenarios, key);
  std::vector<std::vector<double>> factors(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    factors[i].assign(scenarios.levels(i).size(), 0.0);
    for (std::size_t l = 0; l < key[i]; ++l) factors[i][l] = 1.0;
  }
  return combine(scenarios, factors);
}

IntegerSolution solve_joint_exact_integer(const JointScenarioSet& scenarios, double epsilon,
                                          std::span<const double> prices) {
  validate_joint_epsilon(epsilon);
  validate_prices(scenarios, prices);
  const std::size_t L = scenarios.stations();
  const double target = 1.0 - epsilon;

  LatticeSearch search(scenarios, prices, target);
  search.best = feasible_incumbent(scenarios, epsilon, prices);
  search.best_cost = integer_cost(prices, search.best);

  // Box from the incumbent's cost: c_i n_i <= C - sum_{j!=i} c_j lower_j,
  // and lower_i is the least n_i feasible with every other station at its cap.
  search.lower.assign(L, 1);
  search.upper.assign(L, 0);
  for (int round = 0; round < 3; ++round) {
    const double lower_cost = integer_cost(prices, search.lower);
    for (std::size_t i = 0; i < L; ++i) {
      const double others = lower_cost - prices[i] * static_cast<double>(search.lower[i]);
      search.upper[i] = static_cast<std::int64_t>(
          std::floor((search.best_cost - others) / prices[i] + kCostTolerance));
    }
    if (round == 0) search.build_tables(search.upper);
    for (std::size_t i = 0; i < L; ++i) {
      std::vector<std::int64_t> probe = search.upper;
      const auto v = search.smallest(probe, i, search.lower[i], search.upper[i]);
      if (!v) fail(ErrorCode::kInternal, "incumbent lies outside the search box");
      search.lower[i] = *v;
    }
  }

  std::vector<std::int64_t> n(L);
  search.search(0, 0.0, n);

  IntegerSolution out;
  out.n = search.best;
  out.cost = integer_cost(prices, out.n);
  out.achieved_no_wait = joint_constraint_value(scenarios, out.n);
  out.expected_union_wait = 1.0 - out.achieved_no_wait;
  out.lower = search.lower;
  out.upper = search.upper;
  out.lattice_points = search.visited;
  return out;
}

JointDecision solve_decoupled(const JointScenarioSet& scenarios, double epsilon,
                              std::span<const double> prices) {
  validate_joint_epsilon(epsilon);
  validate_prices(scenarios, prices);
  const std::size_t L = scenarios.stations();
  const double station_epsilon = 1.0 - std::pow(1.0 - epsilon, 1.0 / static_cast<double>(L));

  JointDecision d;
  d.method = "decoupled";
  d.converged = true;
  for (std::size_t i = 0; i < L; ++i) {
    const StochSolveReport r = solve_reduced(scenarios.marginal(i), station_epsilon,
                                             CostFunction::linear_in_servers(prices[i]));
    d.key.push_back(r.decision.key_index);
    d.key_rates.push_back(r.decision.key_rate);
    d.betas.push_back(r.decision.beta);
    d.evaluations += r.evaluations;
  }
  finalize(d, scenarios, prices);
  d.objective = d.continuous_cost;
  d.model_no_wait = joint_no_wait(scenarios, d.n_continuous);
  return d;
}

JointDecision solve_reduced_joint(const JointScenarioSet& scenarios, double epsilon,
                                  std::span<const double> prices, const KeyVector& key,
                                  DelayModel bound, CostBasis basis) {
  validate_joint_epsilon(epsilon);
  validate_prices(scenarios, prices);
  validate_key(scenarios, key);
  if (bound != DelayModel::kExact && bound != DelayModel::kJvlzUpper) {
    fail(ErrorCode::kValidation, "reduced model takes the exact or upper bound");
  }
  JointDecision d = start_decision(
      scenarios, key, bound == DelayModel::kExact ? "reduced-exact" : "reduced-ub");
  const double target = 1.0 - epsilon;
  d.over_conservative = reduced_constant_terms(scenarios, key) >= target;
  solve_on_boundary(d, prices, basis, target, [&](std::span<const double> betas) {
    return reduced_joint_no_wait(scenarios, key, betas, bound);
  });
  finalize(d, scenarios, prices);
  return d;
}

JointDecision solve_joint_continuous(const JointScenarioSet& scenarios, double epsilon,
                                     std::span<const double> prices, const KeyVector& key,
                                     CostBasis basis) {
  validate_joint_epsilon(epsilon);
  validate_prices(scenarios, prices);
  validate_key(scenarios, key);
  JointDecision d = start_decision(scenarios, key, "joint-continuous");
  std::vector<double> servers(key.size());
  solve_on_boundary(d, prices, basis, 1.0 - epsilon, [&](std::span<const double> betas) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
      servers[i] = sqrt_staffing(betas[i], d.key_rates[i]);
    }
    return joint_no_wait(scenarios, servers);
  });
  finalize(d, scenarios, prices);
  return d;
}

std::vector<KeyVector> all_keys(const JointScenarioSet& scenarios, std::size_t cap) {
  const std::size_t L = scenarios.stations();
  double count = 1.0;
  for (std::size_t i = 0; i < L; ++i) count *= static_cast<double>(scenarios.levels(i).size());
  if (count > static_cast<double>(cap)) {
    fail(ErrorCode::kEnumerationCap, std::to_string(static_cast<long long>(count)) +
                                         " key vectors exceed the cap of " +
                                         std::to_string(cap));
  }
  std::vector<KeyVector> keys;
  KeyVector key(L, 0);
  while (true) {
    keys.push_back(key);
    std::size_t i = L;
    while (i > 0) {
      --i;
      if (++key[i] < scenarios.levels(i).size()) break;
      key[i] = 0;
      if (i == 0) return keys;
    }
  }
}

KeyEnumeration enumerate_key_scenarios(const JointScenarioSet& scenarios, double epsilon,
                                       std::span<const double> prices, DelayModel bound,
                                       std::size_t cap) {
  validate_joint_epsilon(epsilon);
  validate_prices(scenarios, prices);
  const std::vector<KeyVector> keys = all_keys(scenarios, cap);
  std::vector<std::optional<JointDecision>> results(keys.size());
  detail::parallel_for(keys.size(), [&](std::size_t k) {
    try {
      results[k] = solve_reduced_joint(scenarios, epsilon, prices, keys[k], bound);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
    }
  });

  KeyEnumeration out;
  out.candidates = keys.size();
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k]) continue;
    if (!best || results[k]->continuous_cost <
                     out.feasible[*best].continuous_cost - kCostTolerance) {
      best = out.feasible.size();
    }
    out.feasible.push_back(std::move(*results[k]));
  }
  if (!best) fail(ErrorCode::kInfeasible, "every key vector is infeasible");
  out.best = out.feasible[*best];
  return out;
}

JointDecision solve_joint_exact_model(const JointScenarioSet& scenarios, double epsilon,
                                      std::span<const double> prices) {
  const KeyEnumeration keys = enumerate_key_scenarios(scenarios, epsilon, prices);
  JointDecision d = solve_joint_continuous(scenarios, epsilon, prices, keys.best.key);
  d.method = "exact-model";
  return d;
}

ComparisonReport compare_solutions(const JointScenarioSet& scenarios, double epsilon,
                                   std::span<const double> prices) {
  ComparisonReport report;
  const KeyEnumeration keys = enumerate_key_scenarios(scenarios, epsilon, prices);
  report.reduced = keys.best;
  report.joint = solve_joint_continuous(scenarios, epsilon, prices, keys.best.key);
  report.joint.method = "exact-model";
  report.integer_optimum = solve_joint_exact_integer(scenarios, epsilon, prices);
  report.decoupled = solve_decoupled(scenarios, epsilon, prices);
  report.cost_ratio = report.decoupled.cost / report.joint.cost;
  return report;
}

double weighted_stoch_objective(const JointScenarioSet& scenarios, double delta,
                                std::span<const CostFunction> costs, const KeyVector& key,
                                std::span<const double> betas, DelayModel model) {
  validate_key(scenarios, key);
  double cost = 0.0;
  std::vector<double> servers(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    const double rate = scenarios.levels(i)[key[i]];
    cost += costs[i](betas[i], rate);
    servers[i] = sqrt_staffing(betas[i], rate);
  }
  return cost + delta * (1.0 - joint_no_wait(scenarios, servers, model));
}

WeightedStochResult solve_weighted_stoch(const JointScenarioSet& scenarios, double delta,
                                         std::span<const CostFunction> costs,
                                         DelayModel model, std::size_t cap) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    fail(ErrorCode::kValidation, "delta must be positive and finite");
  }
  const std::size_t L = scenarios.stations();
  if (costs.size() != L) fail(ErrorCode::kValidation, "need one cost function per station");
  const std::vector<KeyVector> keys = all_keys(scenarios, cap);

  struct Outcome {
    DescentResult descent;
  };
  std::vector<Outcome> outcomes(keys.size());
  detail::parallel_for(keys.size(), [&](std::size_t k) {
    const KeyVector& key = keys[k];
    std::vector<double> start(L);
    std::vector<double> upper(L);
    for (std::size_t i = 0; i < L; ++i) {
      const double rate = scenarios.levels(i)[key[i]];
      // Past upper[i] the extra cost alone exceeds delta.
      const double base = costs[i](0.0, rate);
      double hi = 1.0;
      while (hi < kBetaCap && costs[i](hi, rate) - base < delta) hi = std::min(2 * hi, kBetaCap);
      upper[i] = hi;
      start[i] = std::min(hi, solve_weighted(rate, delta / L, costs[i], model).beta);
    }
    outcomes[k].descent = coordinate_descent(
        [&](std::span<const double> betas) {
          return weighted_stoch_objective(scenarios, delta, costs, key, betas, model);
        },
        start, upper);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < keys.size(); ++k) {
    if (outcomes[k].descent.value < outcomes[best].descent.value - kCostTolerance) best = k;
  }
  WeightedStochResult out;
  out.model = model;
  out.objective = outcomes[best].descent.value;
  JointDecision& d = out.decision;
  d = start_decision(scenarios, keys[best], std::string("weighted-") + std::string(to_string(model)));
  d.betas = outcomes[best].descent.x;
  d.objective = out.objective;
  d.converged = outcomes[best].descent.converged;
  for (const auto& o : outcomes) d.evaluations += o.descent.evaluations;
  finalize(d, scenarios, std::vector<double>(L, 1.0));
  d.cost = 0.0;
  d.continuous_cost = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    const double rate = d.key_rates[i];
    const double integer_beta = (static_cast<double>(d.n_integer[i]) - rate) / std::sqrt(rate);
    d.continuous_cost += costs[i](d.betas[i], rate);
    d.cost += costs[i](std::max(0.0, integer_beta), rate);
  }
  d.model_no_wait = joint_no_wait(scenarios, d.n_continuous, model);
  out.exact_objective = weighted_stoch_objective(scenarios, delta, costs, d.key, d.betas,
                                                 DelayModel::kExact);
  return out;
}

}  // namespace staffing
