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

#include "staffing/reports.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "staffing/error.hpp"
#include "staffing/frontier.hpp"
#include "staffing/multi_det.hpp"
#include "staffing/stoch_multi.hpp"
#include "staffing/stoch_single.hpp"

namespace staffing {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class TextTable {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out += line + '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + '\n';
}

struct StationLine {
  std::string id;
  std::optional<std::string> key;
  std::optional<double> key_rate;
  std::optional<double> beta;
  std::optional<double> n_continuous;
  std::int64_t n = 0;
};

struct SummaryItem {
  std::string key;
  std::string label;
  json value;
};

std::string render_value(const json& v) {
  if (v.is_number_float()) return format_sig(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Stations as JSON, aligned table and CSV, followed by the summary lines.
void render_solution(Report& r, json& solution, const std::vector<StationLine>& lines,
                     const std::vector<SummaryItem>& summary) {
  const bool keyed = std::any_of(lines.begin(), lines.end(), [](const auto& l) { return l.key; });
  const bool has_beta =
      std::any_of(lines.begin(), lines.end(), [](const auto& l) { return l.beta.has_value(); });

  json stations = json::array();
  TextTable table;
  std::vector<std::string> header = {"station"};
  std::vector<std::string> csv_header = {"station"};
  if (keyed) {
    header.insert(header.end(), {"key", "key rate"});
    csv_header.insert(csv_header.end(), {"key", "key_rate"});
  }
  if (has_beta) {
    header.insert(header.end(), {"beta", "n (continuous)"});
    csv_header.insert(csv_header.end(), {"beta", "n_continuous"});
  }
  header.push_back("n");
  csv_header.push_back("n");
  table.add(header);
  r.csv = join_csv(csv_header);

  for (const auto& l : lines) {
    json js = {{"id", l.id}, {"n", l.n}};
    std::vector<std::string> row = {l.id};
    std::vector<std::string> csv_row = {l.id};
    if (keyed) {
      js["key"] = *l.key;
      js["key_rate"] = *l.key_rate;
      row.insert(row.end(), {*l.key, format_sig(*l.key_rate)});
      csv_row.insert(csv_row.end(), {*l.key, format_fixed(*l.key_rate)});
    }
    if (has_beta) {
      js["beta"] = *l.beta;
      js["n_continuous"] = *l.n_continuous;
      row.insert(row.end(), {format_sig(*l.beta), format_sig(*l.n_continuous)});
      csv_row.insert(csv_row.end(), {format_fixed(*l.beta), format_fixed(*l.n_continuous)});
    }
    row.push_back(std::to_string(l.n));
    csv_row.push_back(std::to_string(l.n));
    table.add(row);
    r.csv += join_csv(csv_row);
    stations.push_back(std::move(js));
    r.staffing.push_back(l.n);
  }
  solution["stations"] = std::move(stations);

  TextTable totals;
  for (const auto& item : summary) {
    solution[item.key] = item.value;
    totals.add({item.label, render_value(item.value)});
  }
  r.table += table.render() + "\n" + totals.render();
}

json record_header(const std::string& command) {
  return {{"tool", "staffing"}, {"version", STAFFING_VERSION}, {"command", command}};
}

void finish_record(Report& r, json& record, Clock::time_point start) {
  record["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  r.json = record.dump(2);
}

std::vector<StationLine> joint_lines(const ScenarioFile& file, const JointDecision& d) {
  std::vector<StationLine> lines;
  for (std::size_t i = 0; i < d.n_integer.size(); ++i) {
    StationLine l;
    l.id = file.stations[i].id;
    if (!d.key.empty()) {
      l.key = level_name(file, i, d.key_rates[i]);
      l.key_rate = d.key_rates[i];
    }
    if (!d.betas.empty()) {
      l.beta = d.betas[i];
      l.n_continuous = d.n_continuous[i];
    }
    l.n = d.n_integer[i];
    lines.push_back(std::move(l));
  }
  return lines;
}

json joint_json(const ScenarioFile& file, const JointDecision& d) {
  json j;
  Report scratch;
  render_solution(scratch, j, joint_lines(file, d), {});
  j["method"] = d.method;
  j["cost"] = d.cost;
  j["expected_union_wait"] = d.expected_union_wait;
  j["achieved_no_wait"] = d.achieved_no_wait;
  return j;
}

std::vector<SummaryItem> joint_summary(const JointDecision& d) {
  return {
      {"method", "method", d.method},
      {"cost", "staffing cost", d.cost},
      {"continuous_cost", "cost at continuous staffing", d.continuous_cost},
      {"objective", "solver objective", d.objective},
      {"model_no_wait", "no-wait probability (solve model)", d.model_no_wait},
      {"achieved_no_wait", "no-wait probability (exact)", d.achieved_no_wait},
      {"expected_union_wait", "expected union wait (exact)", d.expected_union_wait},
      {"over_conservative", "over-conservative key", d.over_conservative},
      {"converged", "converged", d.converged},
      {"evaluations", "constraint evaluations", d.evaluations},
  };
}

void set_joint_report(Report& r, const ScenarioFile& file, const JointDecision& d,
                      json& solution) {
  render_solution(r, solution, joint_lines(file, d), joint_summary(d));
  r.cost = d.cost;
  r.achieved_wait = d.expected_union_wait;
  r.objective = d.objective;
}

double require(const std::optional<double>& v, const char* what, const char* pointer) {
  if (!v) fail(ErrorCode::kValidation, std::string("this mode needs ") + what, pointer);
  return *v;
}

ScenarioSet single_station_set(const ScenarioFile& file) {
  if (file.stations.size() != 1) {
    fail(ErrorCode::kValidation, "single-station modes need exactly one station", "/stations");
  }
  return to_joint_scenarios(file).marginal(0);
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_sig(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

Report run_solve(const ScenarioFile& file, const SolveOptions& options) {
  const auto start = Clock::now();
  const std::string mode = options.mode.empty() ? file.problem.solver : options.mode;
  if (mode.empty()) {
    fail(ErrorCode::kValidation, "no solver mode given", "/problem/solver");
  }
  if (!is_solve_mode(mode)) fail(ErrorCode::kValidation, "unknown mode '" + mode + "'");
  const std::optional<double> epsilon = options.epsilon ? options.epsilon : file.problem.epsilon;
  const std::optional<double> delta = options.delta ? options.delta : file.problem.delta;
  const std::string bound_text = options.bound.value_or(file.problem.bound);
  const DelayModel bound = parse_delay_model(bound_text);

  Report r;
  r.command = "solve";
  r.table = "mode  " + mode + "\n\n";
  json solution;

  if (mode == "det") {
    const std::vector<double> rates = deterministic_rates(file);
    const std::vector<CostFunction> costs = cost_functions(file);
    std::vector<StationLine> lines;
    std::vector<SummaryItem> summary;
    double no_wait = 1.0;
    if (rates.size() == 1 && epsilon) {
      const SolveReport s = solve_constrained(rates[0], *epsilon, costs[0], bound);
      lines.push_back({file.stations[0].id, {}, {}, s.beta, s.n_continuous, s.n_integer});
      r.objective = s.objective;
      summary.push_back({"residual", "constraint residual", s.residual});
      summary.push_back({"converged", "converged", s.converged});
    } else if (rates.size() == 1) {
      const SolveReport s =
          solve_weighted(rates[0], require(delta, "epsilon or delta", "/problem"), costs[0], bound);
      lines.push_back({file.stations[0].id, {}, {}, s.beta, s.n_continuous, s.n_integer});
      r.objective = s.objective;
      summary.push_back({"converged", "converged", s.converged});
    } else {
      MultiStationInstance instance{rates, costs,
                                    require(delta, "delta for several stations", "/problem/delta")};
      const MultiSolveReport s = solve_multi(instance, bound);
      for (std::size_t i = 0; i < rates.size(); ++i) {
        const double n = sqrt_staffing(s.betas[i], rates[i]);
        lines.push_back({file.stations[i].id, {}, {}, s.betas[i], n,
                         static_cast<std::int64_t>(std::ceil(n - 1e-9))});
      }
      r.objective = s.objective;
      summary.push_back({"converged", "converged", s.converged});
      summary.push_back({"cycles", "descent cycles", s.cycles});
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const double n = static_cast<double>(lines[i].n);
      no_wait *= n > rates[i] ? 1.0 - erlang_c_exact(lines[i].n, rates[i]) : 0.0;
    }
    r.achieved_wait = 1.0 - no_wait;
    r.cost = 0.0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      r.cost += costs[i]((static_cast<double>(lines[i].n) - rates[i]) / std::sqrt(rates[i]),
                         rates[i]);
    }
    summary.insert(summary.begin(), {{"objective", "objective", r.objective},
                                     {"cost", "cost at integer staffing", r.cost},
                                     {"expected_wait", "wait probability (exact)", r.achieved_wait}});
    render_solution(r, solution, lines, summary);
  } else if (mode == "stoch-single" || mode == "stoch-single-exact") {
    const ScenarioSet set = single_station_set(file);
    const double eps = require(epsilon, "epsilon", "/problem/epsilon");
    const CostFunction cost = cost_functions(file)[0];
    const StochSolveReport s = mode == "stoch-single"
                                   ? solve_reduced(set, eps, cost, bound)
                                   : solve_exact_enumeration(set, eps, cost);
    const StaffingDecision& d = s.decision;
    r.objective = s.objective;
    r.cost = s.objective;
    r.achieved_wait = s.expected_wait_integer;
    std::vector<SummaryItem> summary = {
        {"method", "method", std::string(to_string(s.method))},
        {"objective", "cost", s.objective},
        {"expected_wait_continuous", "expected wait (continuous n)", s.expected_wait},
        {"expected_wait", "expected wait (integer n, exact)", s.expected_wait_integer},
        {"slack", "slack", s.slack},
        {"infeasible_warning", "infeasible at this scale", s.infeasible_warning},
    };
    if (!s.optimal_keys.empty()) {
      json keys = json::array();
      for (const auto k : s.optimal_keys) keys.push_back(level_name(file, 0, set.rate(k)));
      summary.push_back({"optimal_keys", "optimal keys", keys});
    }
    render_solution(r, solution,
                    {{file.stations[0].id, level_name(file, 0, d.key_rate), d.key_rate, d.beta,
                      d.n_continuous, d.n_integer}},
                    summary);
  } else if (mode == "stoch-multi-weighted") {
    const JointScenarioSet set = to_joint_scenarios(file);
    const std::vector<CostFunction> costs = cost_functions(file);
    const WeightedStochResult w =
        solve_weighted_stoch(set, require(delta, "delta", "/problem/delta"), costs, bound);
    std::vector<SummaryItem> summary = joint_summary(w.decision);
    summary.push_back({"exact_objective", "objective (exact delay model)", w.exact_objective});
    render_solution(r, solution, joint_lines(file, w.decision), summary);
    r.cost = w.decision.cost;
    r.achieved_wait = w.decision.expected_union_wait;
    r.objective = w.objective;
  } else if (mode == "stoch-multi-integer") {
    const JointScenarioSet set = to_joint_scenarios(file);
    const IntegerSolution s =
        solve_joint_exact_integer(set, require(epsilon, "epsilon", "/problem/epsilon"), prices(file));
    std::vector<StationLine> lines;
    for (std::size_t i = 0; i < s.n.size(); ++i) lines.push_back({file.stations[i].id, {}, {}, {}, {}, s.n[i]});
    render_solution(r, solution, lines,
                    {{"method", "method", "integer-lattice"},
                     {"cost", "staffing cost", s.cost},
                     {"achieved_no_wait", "no-wait probability (exact)", s.achieved_no_wait},
                     {"expected_union_wait", "expected union wait (exact)", s.expected_union_wait},
                     {"search_lower", "search box lower", s.lower},
                     {"search_upper", "search box upper", s.upper},
                     {"lattice_points", "lattice prefixes visited", s.lattice_points}});
    r.cost = s.cost;
    r.objective = s.cost;
    r.achieved_wait = s.expected_union_wait;
  } else {
    const JointScenarioSet set = to_joint_scenarios(file);
    const double eps = require(epsilon, "epsilon", "/problem/epsilon");
    const std::vector<double> price = prices(file);
    if (mode == "stoch-multi-joint") {
      set_joint_report(r, file, solve_joint_exact_model(set, eps, price), solution);
    } else if (mode == "stoch-multi-decoupled") {
      set_joint_report(r, file, solve_decoupled(set, eps, price), solution);
    } else {
      const KeyEnumeration keys = enumerate_key_scenarios(set, eps, price, bound);
      set_joint_report(r, file, keys.best, solution);
      json feasible = json::array();
      TextTable table;
      table.add({"key", "beta", "n", "cost (continuous)"});
      for (const auto& d : keys.feasible) {
        std::string key_label;
        std::string betas;
        std::string ns;
        for (std::size_t i = 0; i < d.key.size(); ++i) {
          const std::string sep = i ? "," : "";
          key_label += sep + level_name(file, i, d.key_rates[i]);
          betas += sep + format_sig(d.betas[i]);
          ns += sep + std::to_string(d.n_integer[i]);
        }
        table.add({"(" + key_label + ")", "(" + betas + ")", "(" + ns + ")",
                   format_sig(d.continuous_cost)});
        feasible.push_back(joint_json(file, d));
      }
      solution["feasible_keys"] = std::move(feasible);
      solution["candidates"] = keys.candidates;
      r.table += "\nfeasible keys\n" + table.render();
    }
  }

  json record = record_header("solve");
  record["solver"] = mode;
  record["bound"] = std::string(to_string(bound));
  record["input_digest"] = "fnv1a64:" + digest_hex(input_digest(file));
  json params = json::object();
  if (epsilon) params["epsilon"] = *epsilon;
  if (delta) params["delta"] = *delta;
  record["parameters"] = std::move(params);
  record["solution"] = std::move(solution);
  record["objective"] = r.objective;
  record["cost"] = r.cost;
  record["achieved_qos"] = {{"expected_wait", r.achieved_wait},
                            {"no_wait", 1.0 - r.achieved_wait},
                            {"evaluation", "exact-erlang-c"}};
  finish_record(r, record, start);
  return r;
}

Report run_compare(const ScenarioFile& file, std::optional<double> epsilon) {
  const auto start = Clock::now();
  const double eps = require(epsilon ? epsilon : file.problem.epsilon, "epsilon", "/problem/epsilon");
  const JointScenarioSet set = to_joint_scenarios(file);
  const ComparisonReport c = compare_solutions(set, eps, prices(file));

  Report r;
  r.command = "compare";
  r.staffing = c.joint.n_integer;
  r.cost = c.joint.cost;
  r.achieved_wait = c.joint.expected_union_wait;
  r.objective = c.joint.objective;

  auto key_label = [&](const JointDecision& d) {
    std::string out;
    for (std::size_t i = 0; i < d.key.size(); ++i) {
      out += (i ? "," : "") + level_name(file, i, d.key_rates[i]);
    }
    return "(" + out + ")";
  };

  TextTable table;
  table.add({"", "exact model", "integer optimum", "reduced", "decoupled"});
  table.add({"key", key_label(c.joint), "-", key_label(c.reduced), key_label(c.decoupled)});
  for (std::size_t i = 0; i < set.stations(); ++i) {
    table.add({"n " + file.stations[i].id, std::to_string(c.joint.n_integer[i]),
               std::to_string(c.integer_optimum.n[i]), std::to_string(c.reduced.n_integer[i]),
               std::to_string(c.decoupled.n_integer[i])});
  }
  table.add({"staffing cost", format_sig(c.joint.cost), format_sig(c.integer_optimum.cost),
             format_sig(c.reduced.cost), format_sig(c.decoupled.cost)});
  table.add({"expected union wait", format_sig(c.joint.expected_union_wait),
             format_sig(c.integer_optimum.expected_union_wait),
             format_sig(c.reduced.expected_union_wait),
             format_sig(c.decoupled.expected_union_wait)});
  r.table = table.render() + "\ncost ratio (decoupled / exact model)  " +
            format_sig(c.cost_ratio) + "\n";

  std::vector<std::string> header = {"solution", "key"};
  for (const auto& s : file.stations) header.push_back("n_" + s.id);
  header.insert(header.end(), {"cost", "expected_union_wait"});
  r.csv = join_csv(header);
  auto csv_row = [&](const std::string& name, const std::string& key,
                     const std::vector<std::int64_t>& n, double cost, double wait) {
    std::vector<std::string> row = {name, key};
    for (const auto v : n) row.push_back(std::to_string(v));
    row.insert(row.end(), {format_fixed(cost, 4), format_fixed(wait)});
    r.csv += join_csv(row);
  };
  csv_row("exact-model", key_label(c.joint), c.joint.n_integer, c.joint.cost,
          c.joint.expected_union_wait);
  csv_row("integer-optimum", "", c.integer_optimum.n, c.integer_optimum.cost,
          c.integer_optimum.expected_union_wait);
  csv_row("reduced", key_label(c.reduced), c.reduced.n_integer, c.reduced.cost,
          c.reduced.expected_union_wait);
  csv_row("decoupled", key_label(c.decoupled), c.decoupled.n_integer, c.decoupled.cost,
          c.decoupled.expected_union_wait);

  json integer = {{"n", c.integer_optimum.n},
                  {"cost", c.integer_optimum.cost},
                  {"expected_union_wait", c.integer_optimum.expected_union_wait},
                  {"achieved_no_wait", c.integer_optimum.achieved_no_wait},
                  {"search_lower", c.integer_optimum.lower},
                  {"search_upper", c.integer_optimum.upper}};
  json record = record_header("compare");
  record["input_digest"] = "fnv1a64:" + digest_hex(input_digest(file));
  record["parameters"] = {{"epsilon", eps}};
  record["solution"] = {{"joint", joint_json(file, c.joint)},
                        {"integer_optimum", std::move(integer)},
                        {"reduced", joint_json(file, c.reduced)},
                        {"decoupled", joint_json(file, c.decoupled)},
                        {"cost_ratio", c.cost_ratio}};
  record["objective"] = r.objective;
  record["cost"] = r.cost;
  record["achieved_qos"] = {{"expected_wait", r.achieved_wait},
                            {"no_wait", 1.0 - r.achieved_wait},
                            {"evaluation", "exact-erlang-c"}};
  finish_record(r, record, start);
  return r;
}

Report run_frontier(const FrontierOptions& options) {
  const auto start = Clock::now();
  const std::vector<double> grid = epsilon_grid(options.from, options.to, options.step);
  const std::vector<FrontierPoint> points =
      sweep_frontier(options.lambda, grid, options.cost, options.bound);

  Report r;
  r.command = "frontier";
  const std::vector<std::string> columns = {"epsilon",         "beta", "n_continuous",
                                            "n_integer",       "cost", "wait_prob_exact",
                                            "wait_prob_bound", "status"};
  r.csv = join_csv(columns);
  TextTable table;
  table.add(columns);
  json rows = json::array();
  for (const auto& p : points) {
    const std::string status = p.ok ? "ok" : p.error;
    if (!p.ok) ++r.failures;
    r.csv += join_csv({format_fixed(p.epsilon, 6), format_fixed(p.beta), format_fixed(p.n_continuous),
                       std::to_string(p.n_integer), format_fixed(p.cost), format_fixed(p.wait_prob_exact),
                       format_fixed(p.wait_prob_bound), status});
    table.add({format_sig(p.epsilon), format_sig(p.beta), format_sig(p.n_continuous),
               std::to_string(p.n_integer), format_sig(p.cost), format_sig(p.wait_prob_exact),
               format_sig(p.wait_prob_bound), status});
    rows.push_back({{"epsilon", p.epsilon},
                    {"beta", p.beta},
                    {"n_continuous", p.n_continuous},
                    {"n_integer", p.n_integer},
                    {"cost", p.cost},
                    {"wait_prob_exact", p.wait_prob_exact},
                    {"wait_prob_bound", p.wait_prob_bound},
                    {"ok", p.ok},
                    {"error", p.error}});
    r.staffing.push_back(p.n_integer);
  }
  r.table = table.render();

  json record = record_header("frontier");
  record["parameters"] = {{"lambda", options.lambda},
                          {"from", options.from},
                          {"to", options.to},
                          {"step", options.step},
                          {"bound", std::string(to_string(options.bound))},
                          {"cost_kind", std::string(to_string(options.cost.kind()))},
                          {"cost_coefficient", options.cost.coefficient()}};
  record["points"] = std::move(rows);
  record["failures"] = r.failures;
  finish_record(r, record, start);
  return r;
}

Report run_simulate(const SimulateOptions& options) {
  const auto start = Clock::now();
  Report r;
  r.command = "simulate";
  SimEstimate e;
  double formula = 0.0;
  json params = {{"replications", options.config.replications},
                 {"measured_customers", options.config.measured_customers},
                 {"seed", options.config.seed}};
  if (options.file != nullptr) {
    const JointScenarioSet set = to_joint_scenarios(*options.file);
    if (options.servers.size() != set.stations()) {
      fail(ErrorCode::kValidation, "give one server count per station");
    }
    e = simulate_scenario_qos(set, options.servers, options.config);
    formula = 1.0 - joint_constraint_value(set, options.servers);
    params["servers"] = options.servers;
    params["warmup_customers"] = options.config.warmup_customers;
    r.staffing = options.servers;
  } else {
    e = simulate_wait_probability(options.config);
    formula = erlang_c_exact(options.config.servers, options.config.lambda);
    params["servers"] = options.config.servers;
    params["lambda"] = options.config.lambda;
    params["warmup_customers"] = options.config.effective_warmup();
    r.staffing = {options.config.servers};
  }
  r.achieved_wait = e.wait_prob_mean;

  const bool inside = e.contains(formula);
  TextTable table;
  table.add({"simulated wait probability", format_sig(e.wait_prob_mean)});
  table.add({"99% half-width", format_sig(e.ci99_halfwidth)});
  table.add({"formula value", format_sig(formula)});
  table.add({"formula inside interval", inside ? "yes" : "no"});
  table.add({"time-average P{Q >= n}", format_sig(e.time_average_mean)});
  table.add({"PASTA paired difference", format_sig(e.pasta_difference_mean) + " +/- " +
                                            format_sig(e.pasta_difference_ci99)});
  table.add({"replications", std::to_string(e.replications_used)});
  r.table = table.render();
  r.csv = join_csv({"wait_prob_mean", "ci99_halfwidth", "formula", "time_average_mean",
                    "time_average_ci99", "pasta_difference_mean", "pasta_difference_ci99",
                    "replications"}) +
          join_csv({format_fixed(e.wait_prob_mean), format_fixed(e.ci99_halfwidth),
                    format_fixed(formula), format_fixed(e.time_average_mean),
                    format_fixed(e.time_average_ci99), format_fixed(e.pasta_difference_mean),
                    format_fixed(e.pasta_difference_ci99), std::to_string(e.replications_used)});

  json record = record_header("simulate");
  if (options.file != nullptr) {
    record["input_digest"] = "fnv1a64:" + digest_hex(input_digest(*options.file));
  }
  record["parameters"] = std::move(params);
  record["estimate"] = {{"wait_prob_mean", e.wait_prob_mean},
                        {"ci99_halfwidth", e.ci99_halfwidth},
                        {"replications_used", e.replications_used},
                        {"time_average_mean", e.time_average_mean},
                        {"time_average_ci99", e.time_average_ci99},
                        {"pasta_difference_mean", e.pasta_difference_mean},
                        {"pasta_difference_ci99", e.pasta_difference_ci99},
                        {"pasta_consistent", e.pasta_consistent()},
                        {"per_replication", e.per_replication}};
  record["formula"] = {{"value", formula}, {"inside_ci99", inside}};
  finish_record(r, record, start);
  return r;
}

}  // namespace staffing
