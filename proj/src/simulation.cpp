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

#include "staffing/simulation.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "parallel.hpp"
#include "staffing/error.hpp"

namespace staffing {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Counter-based SplitMix64: draw k of stream s is mix(key(s) + k * golden).
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t id) : key_(mix64(seed ^ mix64(id + kGolden))) {}

  double uniform() {
    const std::uint64_t bits = mix64(key_ + (++counter_) * kGolden);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }
  double exponential(double rate) { return -std::log(uniform()) / rate; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct Event {
  double time;
  std::uint64_t seq;
  bool arrival;
  bool operator>(const Event& o) const {
    return time != o.time ? time > o.time : seq > o.seq;
  }
};

struct RunResult {
  double arrival_fraction = 0.0;
  double time_fraction = 0.0;
};

RunResult run_once(std::int64_t servers, double lambda, std::int64_t warmup,
                   std::int64_t measured, Stream stream) {
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;
  std::uint64_t seq = 0;
  events.push({stream.exponential(lambda), seq++, true});

  std::int64_t busy = 0;
  std::int64_t waiting = 0;
  std::int64_t arrivals = 0;
  std::int64_t waited = 0;
  const std::int64_t last_arrival = warmup + measured;
  bool measuring = false;
  double window_start = 0.0;
  double now = 0.0;
  double blocked_time = 0.0;

  while (arrivals < last_arrival) {
    const Event e = events.top();
    events.pop();
    if (measuring && busy == servers) blocked_time += e.time - now;
    now = e.time;
    if (e.arrival) {
      ++arrivals;
      if (arrivals == warmup + 1) {
        measuring = true;
        window_start = now;
      }
      if (measuring && busy == servers) ++waited;
      if (busy < servers) {
        ++busy;
        events.push({now + stream.exponential(1.0), seq++, false});
      } else {
        ++waiting;
      }
      events.push({now + stream.exponential(lambda), seq++, true});
    } else if (waiting > 0) {
      --waiting;
      events.push({now + stream.exponential(1.0), seq++, false});
    } else {
      --busy;
    }
  }
  RunResult r;
  r.arrival_fraction = static_cast<double>(waited) / static_cast<double>(measured);
  const double window = now - window_start;
  r.time_fraction = window > 0.0 ? blocked_time / window : 0.0;
  return r;
}

// Pairwise sum so the result does not depend on how replications were scheduled.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 2) return std::accumulate(v.begin(), v.end(), 0.0);
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void summarize(std::span<const double> samples, double& mean, double& halfwidth) {
  const auto r = static_cast<double>(samples.size());
  mean = pairwise_sum(samples) / r;
  std::vector<double> sq;
  sq.reserve(samples.size());
  for (const double x : samples) sq.push_back((x - mean) * (x - mean));
  const double variance = pairwise_sum(sq) / (r - 1.0);
  const boost::math::students_t t(r - 1.0);
  halfwidth = boost::math::quantile(t, 0.995) * std::sqrt(variance / r);
}

// Each replication yields (arrival-seen, time-average) for the quantity of
// interest; the estimate is the across-replication mean with a t interval.
template <typename Replicate>
SimEstimate estimate(const SimConfig& config, Replicate&& replicate) {
  const auto reps = static_cast<std::size_t>(config.replications);
  std::vector<double> arrival(reps);
  std::vector<double> time(reps);
  detail::parallel_for(reps, [&](std::size_t r) {
    const RunResult x = replicate(r);
    arrival[r] = x.arrival_fraction;
    time[r] = x.time_fraction;
  });
  std::vector<double> diff(reps);
  for (std::size_t r = 0; r < reps; ++r) diff[r] = arrival[r] - time[r];

  SimEstimate e;
  e.replications_used = config.replications;
  summarize(arrival, e.wait_prob_mean, e.ci99_halfwidth);
  summarize(time, e.time_average_mean, e.time_average_ci99);
  summarize(diff, e.pasta_difference_mean, e.pasta_difference_ci99);
  e.per_replication = std::move(arrival);
  return e;
}

void validate_run(const SimConfig& config) {
  if (config.replications < 2) fail(ErrorCode::kValidation, "need at least 2 replications");
  if (config.measured_customers < kMinMeasuredCustomers) {
    fail(ErrorCode::kValidation, "measured_customers must be at least " +
                                     std::to_string(kMinMeasuredCustomers));
  }
  if (config.warmup_customers < -1) {
    fail(ErrorCode::kValidation, "warmup_customers must be non-negative");
  }
}

void validate_servers(std::int64_t servers) {
  if (servers < 1) fail(ErrorCode::kValidation, "servers must be >= 1");
}

RunResult station_run(std::int64_t servers, double lambda, const SimConfig& config,
                      std::uint64_t stream_id) {
  if (static_cast<double>(servers) <= lambda) return {1.0, 1.0};
  const std::int64_t warmup =
      config.warmup_customers < 0 ? 10 * servers : config.warmup_customers;
  return run_once(servers, lambda, warmup, config.measured_customers,
                  Stream(config.seed, stream_id));
}

}  // namespace

bool SimEstimate::pasta_consistent() const {
  return std::abs(wait_prob_mean - time_average_mean) <= ci99_halfwidth + time_average_ci99 &&
         std::abs(pasta_difference_mean) <= pasta_difference_ci99 + 1e-12;
}

void validate(const SimConfig& config) {
  validate_run(config);
  validate_servers(config.servers);
  if (!(config.lambda > 0.0) || !std::isfinite(config.lambda)) {
    fail(ErrorCode::kValidation, "lambda must be positive and finite");
  }
  if (config.lambda >= static_cast<double>(config.servers)) {
    fail(ErrorCode::kUnstable, "simulation needs lambda < servers");
  }
}

SimEstimate simulate_wait_probability(const SimConfig& config) {
  validate(config);
  return estimate(config, [&](std::size_t r) {
    return run_once(config.servers, config.lambda, config.effective_warmup(),
                    config.measured_customers, Stream(config.seed, r));
  });
}

SimEstimate simulate_scenario_qos(const ScenarioSet& scenarios, std::int64_t servers,
                                  const SimConfig& config) {
  validate_run(config);
  validate_servers(servers);
  const std::uint64_t levels = scenarios.size();
  return estimate(config, [&](std::size_t r) {
    RunResult total;
    for (std::size_t k = 0; k < scenarios.size(); ++k) {
      const RunResult x = station_run(servers, scenarios.rate(k), config, r * levels + k);
      total.arrival_fraction += scenarios.probability(k) * x.arrival_fraction;
      total.time_fraction += scenarios.probability(k) * x.time_fraction;
    }
    return total;
  });
}

SimEstimate simulate_scenario_qos(const ScenarioSet& scenarios,
                                  const StaffingDecision& decision, const SimConfig& config) {
  return simulate_scenario_qos(scenarios, decision.n_integer, config);
}

SimEstimate simulate_scenario_qos(const JointScenarioSet& scenarios,
                                  std::span<const std::int64_t> servers,
                                  const SimConfig& config) {
  validate_run(config);
  if (servers.size() != scenarios.stations()) {
    fail(ErrorCode::kValidation, "staffing vector length differs from station count");
  }
  for (const auto n : servers) validate_servers(n);
  std::uint64_t streams_per_rep = 0;
  for (std::size_t i = 0; i < servers.size(); ++i) streams_per_rep += scenarios.levels(i).size();

  return estimate(config, [&](std::size_t r) {
    // No-wait fractions per (station, level), then combined per scenario.
    std::vector<std::vector<RunResult>> runs(servers.size());
    std::uint64_t id = r * streams_per_rep;
    for (std::size_t i = 0; i < servers.size(); ++i) {
      for (const double rate : scenarios.levels(i)) {
        runs[i].push_back(station_run(servers[i], rate, config, id++));
      }
    }
    RunResult no_wait;
    for (std::size_t w = 0; w < scenarios.size(); ++w) {
      double seen = scenarios[w].probability;
      double timed = scenarios[w].probability;
      for (std::size_t i = 0; i < servers.size(); ++i) {
        const RunResult& x = runs[i][scenarios.level_of(w, i)];
        seen *= 1.0 - x.arrival_fraction;
        timed *= 1.0 - x.time_fraction;
      }
      no_wait.arrival_fraction += seen;
      no_wait.time_fraction += timed;
    }
    return RunResult{1.0 - no_wait.arrival_fraction, 1.0 - no_wait.time_fraction};
  });
}

}  // namespace staffing
