// Copyright 2026 The scenforge Authors
//
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

#include "scenforge/cli.hpp"

#include "scenforge/catalog.hpp"
#include "scenforge/constraint.hpp"
#include "scenforge/engine.hpp"
#include "scenforge/error.hpp"
#include "scenforge/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace scenforge::cli {

namespace {

constexpr const char* kWorkersEnv = "SCENFORGE_WORKERS";

struct Options {
  std::string catalog_path;
  std::string constraints_path;
  std::size_t min_features = 1;
  std::optional<std::size_t> max_features;
  std::string out_path;
  std::string csv_path;
  std::string svg_path;
  std::string ties = "all";
  std::string mode = "auto";
  std::optional<std::size_t> workers;
  std::size_t limit = 25;
  std::size_t max_ties = 100000;
  std::uint64_t node_limit = 0;
};

struct Inputs {
  Catalog catalog;
  ConstraintSet constraints;
};

Inputs load_inputs(const Options& opt) {
  Inputs in{load_catalog_file(opt.catalog_path), {}};
  if (!opt.constraints_path.empty()) {
    const auto sources = load_constraints_file(opt.constraints_path);
    try {
      in.constraints = bind_constraints(sources, in.catalog);
    } catch (const BindError& e) {
      throw BindError(opt.constraints_path + ": " + e.what(), e.unresolved());
    }
  } else {
    in.constraints = bind_constraints(std::vector<ConstraintSource>{}, in.catalog);
  }
  return in;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(path + ": cannot open for writing");
  f << content;
  f.flush();
  if (!f) throw Error(path + ": write failed");
}

std::size_t resolve_workers(const Options& opt) {
  if (opt.workers) return *opt.workers;
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
      throw Error(std::string(kWorkersEnv) + " must be a positive integer, got \"" + env + "\"");
    }
    return static_cast<std::size_t>(v);
  }
  return 1;
}

GenerationConfig make_config(const Options& opt) {
  GenerationConfig cfg;
  cfg.min_features = opt.min_features;
  cfg.max_features = opt.max_features;
  cfg.tie_policy = opt.ties == "rep" ? TiePolicy::Representative : TiePolicy::AllTies;
  cfg.engine_mode = opt.mode == "brute"  ? EngineMode::BruteForce
                    : opt.mode == "bnb" ? EngineMode::BranchAndBound
                                        : EngineMode::Auto;
  cfg.brute_force_limit = opt.limit;
  cfg.worker_count = resolve_workers(opt);
  cfg.max_ties_per_point = opt.max_ties;
  cfg.node_limit = opt.node_limit;
  return cfg;
}

void add_catalog_args(CLI::App* cmd, Options& opt, bool constraints_required) {
  cmd->add_option("catalog", opt.catalog_path, "Feature catalog (JSON)")->required();
  auto* c = cmd->add_option("-c,--constraints", opt.constraints_path, "Constraint file, one formula per line");
  if (constraints_required) c->required();
}

void add_size_args(CLI::App* cmd, Options& opt) {
  cmd->add_option("--min", opt.min_features, "Minimum features per scenario")->capture_default_str();
  cmd->add_option("--max", opt.max_features, "Maximum features per scenario (default: all)");
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["elapsed_ms"] = elapsed_ms;
  j["counts"] = {{"features", features},
                 {"constraints", constraints},
                 {"valid_examined", valid_examined},
                 {"front_points", front_points},
                 {"front_scenarios", front_scenarios},
                 {"truncated", truncated}};
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scenario generation and Pareto prioritization over annotated feature catalogs",
               args.empty() ? "scenforge" : args.front()};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Parse and bind a catalog and constraint file");
  add_catalog_args(validate, opt, false);

  auto* satcheck = app.add_subcommand("satcheck", "Print a valid scenario, or UNSAT");
  add_catalog_args(satcheck, opt, true);
  add_size_args(satcheck, opt);

  auto* generate = app.add_subcommand("generate", "Enumerate every valid scenario to JSONL");
  add_catalog_args(generate, opt, false);
  add_size_args(generate, opt);
  generate->add_option("--out", opt.out_path, "Scenario JSONL output")->required();
  generate->add_option("--limit", opt.limit, "Largest catalog to enumerate")->capture_default_str();

  auto* front = app.add_subcommand("front", "Compute the Pareto front of valid scenarios");
  add_catalog_args(front, opt, false);
  add_size_args(front, opt);
  front->add_option("--ties", opt.ties, "Tied scenarios per point: all or rep")
      ->check(CLI::IsMember({"all", "rep"}))
      ->capture_default_str();
  front->add_option("--mode", opt.mode, "Engine: auto, brute or bnb")
      ->check(CLI::IsMember({"auto", "brute", "bnb"}))
      ->capture_default_str();
  front->add_option("--out", opt.out_path, "Front scenarios JSONL output")->required();
  front->add_option("--csv", opt.csv_path, "Front summary CSV output");
  front->add_option("--svg", opt.svg_path, "Front scatter plot SVG output");
  front->add_option("--workers", opt.workers, "Search threads (default: $SCENFORGE_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  front->add_option("--max-ties", opt.max_ties, "Scenarios kept per point with --ties all")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  front->add_option("--node-limit", opt.node_limit, "Branch-and-bound node budget (0: none)")
      ->capture_default_str();
  front->add_option("--limit", opt.limit, "Largest catalog for exhaustive mode")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("scenforge");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  try {
    const Options& o = opt;
    if (validate->parsed()) {
      report.command = "validate";
      const Inputs in = load_inputs(o);
      report.features = in.catalog.size();
      report.constraints = in.constraints.size();
      out << "OK: " << in.catalog.size() << " features, " << in.constraints.size() << " constraints\n";
    } else if (satcheck->parsed()) {
      report.command = "satcheck";
      const Inputs in = load_inputs(o);
      report.features = in.catalog.size();
      report.constraints = in.constraints.size();
      GenerationConfig cfg = make_config(o);
      cfg.worker_count = 1;
      const auto witness = check_satisfiable(in.catalog, in.constraints, cfg);
      if (!witness) {
        out << "UNSAT\n";
        return kExitInfeasible;
      }
      out << scenario_record(*witness, score(*witness, in.catalog)) << '\n';
    } else if (generate->parsed()) {
      report.command = "generate";
      const Inputs in = load_inputs(o);
      report.features = in.catalog.size();
      report.constraints = in.constraints.size();
      std::string jsonl;
      for_each_valid(in.catalog, in.constraints, make_config(o), [&](const Scenario& s) {
        jsonl += scenario_record(s, score(s, in.catalog));
        jsonl += '\n';
        ++report.valid_examined;
      });
      write_file(o.out_path, jsonl);
    } else if (front->parsed()) {
      report.command = "front";
      const Inputs in = load_inputs(o);
      report.features = in.catalog.size();
      report.constraints = in.constraints.size();
      const FrontResult result = generate_front(in.catalog, in.constraints, make_config(o));
      report.valid_examined = result.total_valid_examined;
      report.front_points = result.points.size();
      report.front_scenarios = result.scenario_count();
      report.truncated = result.truncated;
      write_file(o.out_path, front_jsonl(result));
      if (!o.csv_path.empty()) write_file(o.csv_path, front_csv(result));
      if (!o.svg_path.empty()) write_file(o.svg_path, render_scatter(result));
    }
  } catch (const InfeasibleConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  err << report.to_json() << '\n';
  return kExitOk;
}

}  // namespace scenforge::cli
