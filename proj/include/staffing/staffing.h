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

#ifndef STAFFING_STAFFING_H_
#define STAFFING_STAFFING_H_

/* C interface to the staffing library. Objects are opaque handles released
 * with the matching *_free function. Every call returning stf_status records
 * a message retrievable with stf_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(STAFFING_BUILDING_LIBRARY)
#define STF_API __declspec(dllexport)
#else
#define STF_API __declspec(dllimport)
#endif
#else
#define STF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stf_status {
  STF_OK = 0,
  STF_ERR_ARGUMENT = 1,   /* null pointer or bad enum value */
  STF_ERR_VALIDATION = 2,
  STF_ERR_DOMAIN = 3,
  STF_ERR_UNSTABLE = 4,
  STF_ERR_BOUNDARY = 5,   /* key-scenario tail sum equals epsilon */
  STF_ERR_SOLVER = 6,     /* bracket, convergence or enumeration limits */
  STF_ERR_INFEASIBLE = 7,
  STF_ERR_IO = 8,
  STF_ERR_INTERNAL = 9
} stf_status;

typedef enum stf_bound {
  STF_BOUND_EXACT = 0,
  STF_BOUND_UPPER = 1,
  STF_BOUND_LOWER = 2,
  STF_BOUND_HW = 3
} stf_bound;

typedef enum stf_format {
  STF_FORMAT_TABLE = 0,
  STF_FORMAT_JSON = 1,
  STF_FORMAT_CSV = 2
} stf_format;

typedef struct stf_scenario_file stf_scenario_file;
typedef struct stf_report stf_report;

STF_API const char* stf_version(void);
STF_API const char* stf_status_name(stf_status status);
/* Process exit code for a status: 0 ok, 2 input, 3 solver, 4 infeasible. */
STF_API int stf_exit_code(stf_status status);
STF_API const char* stf_last_error(void);
/* JSON pointer of the offending input field, or "" when not applicable. */
STF_API const char* stf_last_error_pointer(void);
STF_API void stf_string_free(char* text);

/* Delay probabilities (unit service rate). */
STF_API stf_status stf_erlang_c(int64_t servers, double lambda, double* out);
STF_API stf_status stf_erlang_c_continuous(double servers, double lambda, double* out);
STF_API stf_status stf_wait_probability(double servers, double lambda, stf_bound model,
                                        double* out);
STF_API stf_status stf_jvlz_bounds(double beta, double lambda, double* lower, double* upper);
STF_API stf_status stf_halfin_whitt(double beta, double* out);

/* Scenario files. */
STF_API stf_status stf_scenario_file_load(const char* path, stf_scenario_file** out);
STF_API stf_status stf_scenario_file_parse(const char* json, stf_scenario_file** out);
/* *out is allocated; release with stf_string_free. */
STF_API stf_status stf_scenario_file_to_json(const stf_scenario_file* file, char** out);
STF_API stf_status stf_scenario_file_save(const stf_scenario_file* file, const char* path);
STF_API stf_status stf_scenario_file_digest(const stf_scenario_file* file, uint64_t* out);
STF_API size_t stf_scenario_file_station_count(const stf_scenario_file* file);
STF_API size_t stf_scenario_file_scenario_count(const stf_scenario_file* file);
STF_API void stf_scenario_file_free(stf_scenario_file* file);

/* sum_w p_w prod_i (1 - C(n_i, Lambda_i^w)) with exact integer Erlang-C. */
STF_API stf_status stf_joint_constraint_value(const stf_scenario_file* file,
                                              const int64_t* servers, size_t count,
                                              double* out);

typedef struct stf_solve_options {
  const char* mode;  /* NULL: the file's problem.solver */
  int has_epsilon;
  double epsilon;
  int has_delta;
  double delta;
  const char* bound; /* NULL: the file's problem.bound */
} stf_solve_options;

STF_API void stf_solve_options_init(stf_solve_options* options);
STF_API stf_status stf_solve(const stf_scenario_file* file, const stf_solve_options* options,
                             stf_report** out);
STF_API stf_status stf_compare(const stf_scenario_file* file, int has_epsilon, double epsilon,
                               stf_report** out);

typedef struct stf_frontier_options {
  double lambda;
  double from;
  double to;
  double step;
  stf_bound bound;
  const char* cost_kind; /* NULL: linear-in-beta */
  double cost_coefficient;
} stf_frontier_options;

STF_API void stf_frontier_options_init(stf_frontier_options* options);
STF_API stf_status stf_frontier(const stf_frontier_options* options, stf_report** out);
/* Takes lambda and cost from a single-station deterministic file; options
 * supply the grid and bound. */
STF_API stf_status stf_frontier_file(const stf_scenario_file* file,
                                     const stf_frontier_options* options, stf_report** out);

typedef struct stf_simulate_options {
  int64_t servers;
  double lambda;
  int64_t warmup_customers; /* negative: 10 * servers */
  int64_t measured_customers;
  int replications;
  uint64_t seed;
} stf_simulate_options;

STF_API void stf_simulate_options_init(stf_simulate_options* options);
STF_API stf_status stf_simulate(const stf_simulate_options* options, stf_report** out);
/* Ignores options->servers and options->lambda. */
STF_API stf_status stf_simulate_scenarios(const stf_scenario_file* file, const int64_t* servers,
                                          size_t count, const stf_simulate_options* options,
                                          stf_report** out);

/* Report accessors. Returned strings live as long as the report. */
STF_API const char* stf_report_text(const stf_report* report, stf_format format);
STF_API size_t stf_report_staffing_count(const stf_report* report);
STF_API int64_t stf_report_staffing(const stf_report* report, size_t index);
STF_API double stf_report_cost(const stf_report* report);
STF_API double stf_report_achieved_wait(const stf_report* report);
STF_API double stf_report_objective(const stf_report* report);
STF_API int stf_report_failures(const stf_report* report);
STF_API void stf_report_free(stf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* STAFFING_STAFFING_H_ */
