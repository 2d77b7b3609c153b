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

// staffing-cli: command-line front end. Talks to the library only through
// the C interface in staffing/staffing.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "staffing/staffing.h"

namespace {

struct FileDeleter {
  void operator()(stf_scenario_file* f) const { stf_scenario_file_free(f); }
};
struct ReportDeleter {
  void operator()(stf_report* r) const { stf_report_free(r); }
};
using FilePtr = std::unique_ptr<stf_scenario_file, FileDeleter>;
using ReportPtr = std::unique_ptr<stf_report, ReportDeleter>;

struct Common {
  std::string format = "table";
  std::string out;
  bool error_json = false;
};

std::string json_escape(const std::string& s) {
  std::string r;
  for (const char c : s) {
    switch (c) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          r += buf;
        } else {
          r += c;
        }
    }
  }
  return r;
}

int report_error(stf_status status, const Common& common) {
  const std::string message = stf_last_error();
  const std::string pointer = stf_last_error_pointer();
  if (common.error_json) {
    std::cerr << "{\"error\":{\"status\":\"" << stf_status_name(status) << "\",\"exit_code\":"
              << stf_exit_code(status) << ",\"message\":\"" << json_escape(message)
              << "\",\"pointer\":\"" << json_escape(pointer) << "\"}}\n";
  } else {
    std::cerr << "error (" << stf_status_name(status) << "): " << message;
    if (!pointer.empty() && message.find(pointer) == std::string::npos) {
      std::cerr << " at " << pointer;
    }
    std::cerr << '\n';
  }
  return stf_exit_code(status);
}

int usage_error(const std::string& message, const Common& common) {
  if (common.error_json) {
    std::cerr << "{\"error\":{\"status\":\"argument\",\"exit_code\":2,\"message\":\""
              << json_escape(message) << "\",\"pointer\":\"\"}}\n";
  } else {
    std::cerr << "error (argument): " << message << '\n';
  }
  return 2;
}

stf_format to_format(const std::string& name) {
  if (name == "json") return STF_FORMAT_JSON;
  if (name == "csv") return STF_FORMAT_CSV;
  return STF_FORMAT_TABLE;
}

stf_bound to_bound(const std::string& name) {
  if (name == "upper") return STF_BOUND_UPPER;
  if (name == "lower") return STF_BOUND_LOWER;
  if (name == "hw") return STF_BOUND_HW;
  return STF_BOUND_EXACT;
}

bool write_text(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (text[0] != '\0' && std::string(text).back() != '\n') out << '\n';
  return static_cast<bool>(out);
}

// Prints the report in the chosen format and writes `file_format` to --out.
int emit(const ReportPtr& report, const Common& common, stf_format file_format) {
  std::string text = stf_report_text(report.get(), to_format(common.format));
  if (!text.empty() && text.back() != '\n') text += '\n';
  std::cout << text;
  if (!common.out.empty() && !write_text(common.out, stf_report_text(report.get(), file_format))) {
    return usage_error("cannot write " + common.out, common);
  }
  return 0;
}

FilePtr load(const std::string& path, stf_status& status) {
  stf_scenario_file* raw = nullptr;
  status = stf_scenario_file_load(path.c_str(), &raw);
  return FilePtr(raw);
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", common.out, "also write the run record to this file");
  cmd->add_flag("--error-json", common.error_json, "report errors as JSON on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staffing of many-server queues under arrival-rate uncertainty"};
  app.set_version_flag("--version", std::string(stf_version()));
  app.require_subcommand(1);

  Common common;
  std::string bound = "exact";
  const auto bound_check = CLI::IsMember({"exact", "upper", "lower", "hw"});

  // frontier
  auto* frontier = app.add_subcommand("frontier", "efficient frontier of a single station");
  std::string frontier_file;
  std::optional<double> frontier_lambda;
  double from = 0.05, to = 0.95, step = 0.05;
  std::string cost_kind = "linear-in-beta";
  double cost_coefficient = 1.0;
  frontier->add_option("file", frontier_file, "single-station scenario file");
  frontier->add_option("--lambda", frontier_lambda, "arrival rate (service rate 1)");
  frontier->add_option("--from", from, "first epsilon");
  frontier->add_option("--to", to, "last epsilon");
  frontier->add_option("--step", step, "epsilon step");
  frontier->add_option("--bound", bound, "delay model")->check(bound_check);
  frontier->add_option("--cost", cost_kind, "cost kind without a file")
      ->check(CLI::IsMember({"linear-in-beta", "linear-in-servers"}));
  frontier->add_option("--price", cost_coefficient, "cost coefficient without a file");
  add_common(frontier, common);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one staffing model");
  std::string solve_file, mode, solve_bound;
  std::optional<double> epsilon, delta;
  solve->add_option("file", solve_file, "scenario file")->required();
  solve->add_option("--mode", mode,
                    "det|stoch-single|stoch-single-exact|stoch-multi-joint|"
                    "stoch-multi-integer|stoch-multi-decoupled|stoch-multi-reduced|"
                    "stoch-multi-weighted");
  solve->add_option("--epsilon", epsilon, "wait-probability target");
  solve->add_option("--delta", delta, "price of the union wait probability");
  solve->add_option("--bound", solve_bound, "delay model")->check(bound_check);
  add_common(solve, common);

  // compare
  auto* compare = app.add_subcommand("compare", "joint, reduced and decoupled side by side");
  std::string compare_file;
  compare->add_option("file", compare_file, "multi-station scenario file")->required();
  compare->add_option("--epsilon", epsilon, "union wait target");
  add_common(compare, common);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "M/M/n simulation against Erlang-C");
  std::string simulate_file;
  std::vector<std::int64_t> servers;
  std::optional<double> sim_lambda;
  stf_simulate_options sim;
  stf_simulate_options_init(&sim);
  std::int64_t warmup = -1;
  simulate->add_option("file", simulate_file, "scenario file (simulates every scenario)");
  simulate->add_option("--servers", servers, "servers, one per station")->delimiter(',');
  simulate->add_option("--lambda", sim_lambda, "arrival rate without a file");
  simulate->add_option("--seed", sim.seed, "base seed");
  simulate->add_option("--replications", sim.replications, "independent replications");
  simulate->add_option("--customers", sim.measured_customers, "measured customers per run");
  simulate->add_option("--warmup", warmup, "discarded customers (default 10 n)");
  add_common(simulate, common);

  // validate
  auto* validate = app.add_subcommand("validate", "check a scenario file");
  std::string validate_file;
  validate->add_option("file", validate_file, "scenario file")->required();
  validate->add_flag("--error-json", common.error_json, "report errors as JSON on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return usage_error(e.what(), common);
  }

  stf_status status = STF_OK;
  stf_report* raw = nullptr;

  if (*frontier) {
    stf_frontier_options o;
    stf_frontier_options_init(&o);
    o.from = from;
    o.to = to;
    o.step = step;
    o.bound = to_bound(bound);
    if (!frontier_file.empty()) {
      FilePtr file = load(frontier_file, status);
      if (status != STF_OK) return report_error(status, common);
      status = stf_frontier_file(file.get(), &o, &raw);
    } else {
      if (!frontier_lambda) return usage_error("frontier needs a file or --lambda", common);
      o.lambda = *frontier_lambda;
      o.cost_kind = cost_kind.c_str();
      o.cost_coefficient = cost_coefficient;
      status = stf_frontier(&o, &raw);
    }
    if (status != STF_OK) return report_error(status, common);
    ReportPtr report(raw);
    if (frontier->count("--format") == 0) common.format = "csv";
    const int rc = emit(report, common, STF_FORMAT_CSV);
    if (rc != 0) return rc;
    if (stf_report_failures(report.get()) > 0) {
      std::cerr << "error (solver): " << stf_report_failures(report.get())
                << " frontier point(s) failed\n";
      return 3;
    }
    return 0;
  }

  if (*solve || *compare) {
    FilePtr file = load(*solve ? solve_file : compare_file, status);
    if (status != STF_OK) return report_error(status, common);
    if (*solve) {
      stf_solve_options o;
      stf_solve_options_init(&o);
      if (!mode.empty()) o.mode = mode.c_str();
      o.has_epsilon = epsilon.has_value();
      o.epsilon = epsilon.value_or(0.0);
      o.has_delta = delta.has_value();
      o.delta = delta.value_or(0.0);
      if (!solve_bound.empty()) o.bound = solve_bound.c_str();
      status = stf_solve(file.get(), &o, &raw);
    } else {
      status = stf_compare(file.get(), epsilon.has_value(), epsilon.value_or(0.0), &raw);
    }
    if (status != STF_OK) return report_error(status, common);
    return emit(ReportPtr(raw), common, STF_FORMAT_JSON);
  }

  if (*simulate) {
    sim.warmup_customers = warmup;
    if (!simulate_file.empty()) {
      FilePtr file = load(simulate_file, status);
      if (status != STF_OK) return report_error(status, common);
      status = stf_simulate_scenarios(file.get(), servers.data(), servers.size(), &sim, &raw);
    } else {
      if (servers.size() != 1 || !sim_lambda) {
        return usage_error("simulate without a file needs one --servers value and --lambda",
                           common);
      }
      sim.servers = servers.front();
      sim.lambda = *sim_lambda;
      status = stf_simulate(&sim, &raw);
    }
    if (status != STF_OK) return report_error(status, common);
    return emit(ReportPtr(raw), common, STF_FORMAT_JSON);
  }

  if (*validate) {
    FilePtr file = load(validate_file, status);
    if (status != STF_OK) return report_error(status, common);
    std::uint64_t digest = 0;
    stf_scenario_file_digest(file.get(), &digest);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
    std::cout << "ok: " << stf_scenario_file_station_count(file.get()) << " station(s), "
              << stf_scenario_file_scenario_count(file.get()) << " scenario(s), digest " << hex
              << '\n';
    return 0;
  }
  return 2;
}
