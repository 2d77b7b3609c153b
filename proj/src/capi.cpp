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

#include "staffing/staffing.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "staffing/erlang.hpp"
#include "staffing/error.hpp"
#include "staffing/reports.hpp"
#include "staffing/scenario_file.hpp"
#include "staffing/stoch_multi.hpp"

struct stf_scenario_file {
  staffing::ScenarioFile file;
};

struct stf_report {
  staffing::Report report;
};

namespace {

using staffing::ErrorCode;

thread_local std::string g_last_error;
thread_local std::string g_last_pointer;

stf_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return STF_ERR_DOMAIN;
    case ErrorCode::kUnstable: return STF_ERR_UNSTABLE;
    case ErrorCode::kValidation: return STF_ERR_VALIDATION;
    case ErrorCode::kBoundary: return STF_ERR_BOUNDARY;
    case ErrorCode::kBracket:
    case ErrorCode::kNonConvergence:
    case ErrorCode::kEnumerationCap: return STF_ERR_SOLVER;
    case ErrorCode::kInfeasible: return STF_ERR_INFEASIBLE;
    case ErrorCode::kIo: return STF_ERR_IO;
    case ErrorCode::kInternal: return STF_ERR_INTERNAL;
  }
  return STF_ERR_INTERNAL;
}

stf_status record(stf_status status, std::string message, std::string pointer = {}) {
  g_last_error = std::move(message);
  g_last_pointer = std::move(pointer);
  return status;
}

template <typename Fn>
stf_status guarded(Fn&& fn) {
  try {
    fn();
    return record(STF_OK, "");
  } catch (const staffing::Error& e) {
    return record(to_status(e.code()), e.what(), e.pointer());
  } catch (const std::bad_alloc&) {
    return record(STF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(STF_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(STF_ERR_INTERNAL, "unknown error");
  }
}

stf_status null_argument(const char* name) {
  return record(STF_ERR_ARGUMENT, std::string(name) + " must not be null");
}

staffing::DelayModel to_model(stf_bound bound) {
  switch (bound) {
    case STF_BOUND_EXACT: return staffing::DelayModel::kExact;
    case STF_BOUND_UPPER: return staffing::DelayModel::kJvlzUpper;
    case STF_BOUND_LOWER: return staffing::DelayModel::kJvlzLower;
    case STF_BOUND_HW: return staffing::DelayModel::kHalfinWhitt;
  }
  staffing::fail(ErrorCode::kValidation, "unknown bound value");
}

staffing::SimConfig to_config(const stf_simulate_options& o) {
  staffing::SimConfig c;
  c.servers = o.servers;
  c.lambda = o.lambda;
  c.warmup_customers = o.warmup_customers;
  c.measured_customers = o.measured_customers;
  c.replications = o.replications;
  c.seed = o.seed;
  return c;
}

stf_status emit(staffing::Report report, stf_report** out) {
  *out = new stf_report{std::move(report)};
  return STF_OK;
}

}  // namespace

extern "C" {

const char* stf_version(void) { return STAFFING_VERSION; }

const char* stf_status_name(stf_status status) {
  switch (status) {
    case STF_OK: return "ok";
    case STF_ERR_ARGUMENT: return "argument";
    case STF_ERR_VALIDATION: return "validation";
    case STF_ERR_DOMAIN: return "domain";
    case STF_ERR_UNSTABLE: return "unstable";
    case STF_ERR_BOUNDARY: return "boundary";
    case STF_ERR_SOLVER: return "solver";
    case STF_ERR_INFEASIBLE: return "infeasible";
    case STF_ERR_IO: return "io";
    case STF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int stf_exit_code(stf_status status) {
  switch (status) {
    case STF_OK: return 0;
    case STF_ERR_SOLVER:
    case STF_ERR_INTERNAL: return 3;
    case STF_ERR_INFEASIBLE: return 4;
    default: return 2;
  }
}

const char* stf_last_error(void) { return g_last_error.c_str(); }
const char* stf_last_error_pointer(void) { return g_last_pointer.c_str(); }
void stf_string_free(char* text) { std::free(text); }

stf_status stf_erlang_c(int64_t servers, double lambda, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = staffing::erlang_c_exact(servers, lambda); });
}

stf_status stf_erlang_c_continuous(double servers, double lambda, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = staffing::erlang_c_continuous(servers, lambda); });
}

stf_status stf_wait_probability(double servers, double lambda, stf_bound model, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = staffing::wait_probability(servers, lambda, to_model(model)); });
}

stf_status stf_jvlz_bounds(double beta, double lambda, double* lower, double* upper) {
  if (lower == nullptr || upper == nullptr) return null_argument("lower/upper");
  return guarded([&] {
    const staffing::BoundPair b = staffing::jvlz_bounds(beta, lambda);
    *lower = b.lower;
    *upper = b.upper;
  });
}

stf_status stf_halfin_whitt(double beta, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = staffing::halfin_whitt(beta); });
}

stf_status stf_scenario_file_load(const char* path, stf_scenario_file** out) {
  if (path == nullptr || out == nullptr) return null_argument("path/out");
  *out = nullptr;
  return guarded([&] { *out = new stf_scenario_file{staffing::load_scenario_file(path)}; });
}

stf_status stf_scenario_file_parse(const char* json, stf_scenario_file** out) {
  if (json == nullptr || out == nullptr) return null_argument("json/out");
  *out = nullptr;
  return guarded([&] { *out = new stf_scenario_file{staffing::parse_scenario_file(json)}; });
}

stf_status stf_scenario_file_to_json(const stf_scenario_file* file, char** out) {
  if (file == nullptr || out == nullptr) return null_argument("file/out");
  return guarded([&] {
    const std::string text = staffing::to_json(file->file);
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

stf_status stf_scenario_file_save(const stf_scenario_file* file, const char* path) {
  if (file == nullptr || path == nullptr) return null_argument("file/path");
  return guarded([&] { staffing::save_scenario_file(file->file, path); });
}

stf_status stf_scenario_file_digest(const stf_scenario_file* file, uint64_t* out) {
  if (file == nullptr || out == nullptr) return null_argument("file/out");
  return guarded([&] { *out = staffing::input_digest(file->file); });
}

size_t stf_scenario_file_station_count(const stf_scenario_file* file) {
  return file == nullptr ? 0 : file->file.stations.size();
}

size_t stf_scenario_file_scenario_count(const stf_scenario_file* file) {
  return file == nullptr ? 0 : file->file.scenarios.size();
}

void stf_scenario_file_free(stf_scenario_file* file) { delete file; }

stf_status stf_joint_constraint_value(const stf_scenario_file* file, const int64_t* servers,
                                      size_t count, double* out) {
  if (file == nullptr || servers == nullptr || out == nullptr) {
    return null_argument("file/servers/out");
  }
  return guarded([&] {
    const staffing::JointScenarioSet set = staffing::to_joint_scenarios(file->file);
    *out = staffing::joint_constraint_value(set, std::span<const std::int64_t>(servers, count));
  });
}

void stf_solve_options_init(stf_solve_options* options) {
  if (options != nullptr) *options = stf_solve_options{nullptr, 0, 0.0, 0, 0.0, nullptr};
}

stf_status stf_solve(const stf_scenario_file* file, const stf_solve_options* options,
                     stf_report** out) {
  if (file == nullptr || out == nullptr) return null_argument("file/out");
  *out = nullptr;
  return guarded([&] {
    staffing::SolveOptions o;
    if (options != nullptr) {
      if (options->mode != nullptr) o.mode = options->mode;
      if (options->has_epsilon) o.epsilon = options->epsilon;
      if (options->has_delta) o.delta = options->delta;
      if (options->bound != nullptr) o.bound = std::string(options->bound);
    }
    emit(staffing::run_solve(file->file, o), out);
  });
}

stf_status stf_compare(const stf_scenario_file* file, int has_epsilon, double epsilon,
                       stf_report** out) {
  if (file == nullptr || out == nullptr) return null_argument("file/out");
  *out = nullptr;
  return guarded([&] {
    std::optional<double> eps;
    if (has_epsilon) eps = epsilon;
    emit(staffing::run_compare(file->file, eps), out);
  });
}

void stf_frontier_options_init(stf_frontier_options* options) {
  if (options != nullptr) {
    *options = stf_frontier_options{0.0, 0.05, 0.95, 0.05, STF_BOUND_EXACT, nullptr, 1.0};
  }
}

stf_status stf_frontier(const stf_frontier_options* options, stf_report** out) {
  if (options == nullptr || out == nullptr) return null_argument("options/out");
  *out = nullptr;
  return guarded([&] {
    staffing::FrontierOptions o;
    o.lambda = options->lambda;
    o.from = options->from;
    o.to = options->to;
    o.step = options->step;
    o.bound = to_model(options->bound);
    const auto kind = options->cost_kind == nullptr
                          ? staffing::CostFunction::Kind::kLinearInBeta
                          : staffing::parse_cost_kind(options->cost_kind);
    switch (kind) {
      case staffing::CostFunction::Kind::kLinearInBeta:
        o.cost = staffing::CostFunction::linear_in_beta(options->cost_coefficient);
        break;
      case staffing::CostFunction::Kind::kLinearInServers:
        o.cost = staffing::CostFunction::linear_in_servers(options->cost_coefficient);
        break;
      case staffing::CostFunction::Kind::kTable:
        staffing::fail(ErrorCode::kValidation, "cost tables need a scenario file");
    }
    emit(staffing::run_frontier(o), out);
  });
}

stf_status stf_frontier_file(const stf_scenario_file* file,
                             const stf_frontier_options* options, stf_report** out) {
  if (file == nullptr || options == nullptr || out == nullptr) {
    return null_argument("file/options/out");
  }
  *out = nullptr;
  return guarded([&] {
    if (file->file.stations.size() != 1) {
      staffing::fail(ErrorCode::kValidation, "frontier needs a single-station file", "/stations");
    }
    staffing::FrontierOptions o;
    o.lambda = staffing::deterministic_rates(file->file).at(0);
    o.from = options->from;
    o.to = options->to;
    o.step = options->step;
    o.bound = to_model(options->bound);
    o.cost = staffing::cost_functions(file->file).at(0);
    emit(staffing::run_frontier(o), out);
  });
}

void stf_simulate_options_init(stf_simulate_options* options) {
  if (options != nullptr) *options = stf_simulate_options{1, 0.5, -1, 100000, 10, 1};
}

stf_status stf_simulate(const stf_simulate_options* options, stf_report** out) {
  if (options == nullptr || out == nullptr) return null_argument("options/out");
  *out = nullptr;
  return guarded([&] {
    staffing::SimulateOptions o;
    o.config = to_config(*options);
    emit(staffing::run_simulate(o), out);
  });
}

stf_status stf_simulate_scenarios(const stf_scenario_file* file, const int64_t* servers,
                                  size_t count, const stf_simulate_options* options,
                                  stf_report** out) {
  if (file == nullptr || servers == nullptr || options == nullptr || out == nullptr) {
    return null_argument("file/servers/options/out");
  }
  *out = nullptr;
  return guarded([&] {
    staffing::SimulateOptions o;
    o.config = to_config(*options);
    o.file = &file->file;
    o.servers.assign(servers, servers + count);
    emit(staffing::run_simulate(o), out);
  });
}

const char* stf_report_text(const stf_report* report, stf_format format) {
  if (report == nullptr) return "";
  switch (format) {
    case STF_FORMAT_JSON: return report->report.json.c_str();
    case STF_FORMAT_CSV: return report->report.csv.c_str();
    case STF_FORMAT_TABLE: return report->report.table.c_str();
  }
  return "";
}

size_t stf_report_staffing_count(const stf_report* report) {
  return report == nullptr ? 0 : report->report.staffing.size();
}

int64_t stf_report_staffing(const stf_report* report, size_t index) {
  if (report == nullptr || index >= report->report.staffing.size()) return -1;
  return report->report.staffing[index];
}

double stf_report_cost(const stf_report* report) {
  return report == nullptr ? 0.0 : report->report.cost;
}

double stf_report_achieved_wait(const stf_report* report) {
  return report == nullptr ? 0.0 : report->report.achieved_wait;
}

double stf_report_objective(const stf_report* report) {
  return report == nullptr ? 0.0 : report->report.objective;
}

int stf_report_failures(const stf_report* report) {
  return report == nullptr ? 0 : report->report.failures;
}

void stf_report_free(stf_report* report) { delete report; }

}  // extern "C"
