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
#include "scenforge/report.hpp"

#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace scenforge;
using scenforge::testing::fixture;
using scenforge::testing::read_file;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scenforge");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "scenforge_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

std::string fx(const char* name) { return fixture(name).string(); }

}  // namespace

TEST_CASE("validate") {
  SUBCASE("catalog alone") {
    const auto r = run_cli({"validate", fx("table1.json")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "OK: 10 features, 0 constraints\n");
    const auto report = nlohmann::json::parse(r.err);
    CHECK(report["command"] == "validate");
    CHECK(report["counts"]["features"] == 10);
  }
  SUBCASE("bound constraints") {
    const auto r = run_cli({"validate", fx("synthetic45.json"), "-c", fx("synthetic45.rules")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "OK: 45 features, 22 constraints\n");
  }
  SUBCASE("unknown identifiers are named") {
    const auto r = run_cli({"validate", fx("table1.json"), "-c", fx("bad.rules")});
    CHECK(r.code == cli::kExitInputError);
    CHECK(r.err.find("round_about") != std::string::npos);
    CHECK(r.err.find("bad.rules") != std::string::npos);
  }
  SUBCASE("missing catalog file") {
    CHECK(run_cli({"validate", "/nonexistent.json"}).code == cli::kExitInputError);
  }
  SUBCASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitInputError);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitInputError);
    CHECK(run_cli({"front", fx("table1.json")}).code == cli::kExitInputError);  // --out missing
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
  }
}

TEST_CASE("satcheck") {
  const auto unsat = run_cli({"satcheck", fx("tiny.json"), "-c", fx("contradiction.rules")});
  CHECK(unsat.code == cli::kExitInfeasible);
  CHECK(unsat.out == "UNSAT\n");

  const auto sat = run_cli({"satcheck", fx("fog_grip.json"), "-c", fx("fog_grip.rules")});
  CHECK(sat.code == cli::kExitOk);
  const auto rec = nlohmann::json::parse(sat.out);
  CHECK(rec["features"] == nlohmann::json::array({"low_grip"}));

  const auto infeasible = run_cli({"satcheck", fx("fog_grip.json"), "-c", fx("fog_grip.rules"), "--min", "2", "--max", "1"});
  CHECK(infeasible.code == cli::kExitInfeasible);
}

TEST_CASE("front rejects an infeasible size range") {
  const auto r = run_cli({"front", fx("table1.json"), "--min", "5", "--max", "3", "--out", scratch("x.jsonl").string()});
  CHECK(r.code == cli::kExitInfeasible);
  CHECK(r.err.find("min_features") != std::string::npos);
}

TEST_CASE("front writes re-validatable JSONL, CSV and SVG") {
  const auto jsonl = scratch("front.jsonl"), csv = scratch("front.csv"), svg = scratch("front.svg");
  const auto r = run_cli({"front", fx("synthetic45.json"), "-c", fx("synthetic45.rules"), "--max", "4", "--out",
                          jsonl.string(), "--csv", csv.string(), "--svg", svg.string()});
  REQUIRE(r.code == cli::kExitOk);
  const auto report = nlohmann::json::parse(r.err);
  CHECK(report["command"] == "front");

  const Catalog catalog = load_catalog_file(fixture("synthetic45.json"));
  const auto rules = bind_constraints(load_constraints_file(fixture("synthetic45.rules")), catalog);
  std::istringstream lines(read_file(jsonl));
  std::string line;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    const auto rec = nlohmann::json::parse(line);
    const Scenario s(rec["features"].get<std::vector<std::string>>());
    CHECK(s.size() <= 4);
    for (const auto& f : rules.formulas()) CHECK(evaluate(f, s));
    double lp = 0;
    std::int64_t cs = 0;
    for (const auto& id : s.members()) {
      lp += std::log10(probability_value(catalog, id));
      cs += criticality_rank(catalog, id);
    }
    CHECK(std::abs(rec["log10_p"].get<double>() - lp) < 1e-9);
    CHECK(rec["crit_sum"].get<std::int64_t>() == cs);
    CHECK(std::abs(rec["p_g"].get<double>() - std::pow(10.0, lp)) <= 1e-9 * std::pow(10.0, lp));
    CHECK(rec["c_g"].get<double>() == std::ldexp(1.0, int(cs)));
    ++records;
  }
  CHECK(records == report["counts"]["front_scenarios"].get<std::size_t>());

  const std::string csv_text = read_file(csv);
  CHECK(csv_text.rfind("log10_p,crit_sum,scenario_count,representative_features\n", 0) == 0);
  CHECK(count_of(csv_text, "\n") == report["counts"]["front_points"].get<std::size_t>() + 1);

  const std::string svg_text = read_file(svg);
  CHECK(svg_text.find("<svg") != std::string::npos);
  CHECK(count_of(svg_text, "<circle") == report["counts"]["front_points"].get<std::size_t>());
}

TEST_CASE("repeated front runs are byte-identical") {
  std::string first[3];
  for (int run = 0; run < 3; ++run) {
    const std::string tag = std::to_string(run);
    const auto j = scratch("det" + tag + ".jsonl"), c = scratch("det" + tag + ".csv"), s = scratch("det" + tag + ".svg");
    const std::string workers = run == 2 ? "3" : "1";
    REQUIRE(run_cli({"front", fx("table1.json"), "--out", j.string(), "--csv", c.string(), "--svg", s.string(),
                     "--workers", workers})
                .code == cli::kExitOk);
    const std::string texts[3] = {read_file(j), read_file(c), read_file(s)};
    for (int k = 0; k < 3; ++k) {
      if (run == 0) first[k] = texts[k];
      else CHECK(texts[k] == first[k]);
    }
  }
}

TEST_CASE("generate enumerates every valid scenario") {
  const auto out = scratch("all.jsonl");
  REQUIRE(run_cli({"generate", fx("table1.json"), "--out", out.string()}).code == cli::kExitOk);
  CHECK(count_of(read_file(out), "\n") == 1023);

  REQUIRE(run_cli({"generate", fx("fog_grip.json"), "-c", fx("fog_grip.rules"), "--min", "0", "--out", out.string()})
              .code == cli::kExitOk);
  CHECK(read_file(out) ==
        "{\"features\":[],\"log10_p\":0.0,\"crit_sum\":0,\"p_g\":1.0,\"c_g\":1.0}\n"
        "{\"features\":[\"low_grip\"],\"log10_p\":-1.0,\"crit_sum\":1,\"p_g\":0.1,\"c_g\":2.0}\n"
        "{\"features\":[\"fog\",\"low_grip\"],\"log10_p\":-2.0,\"crit_sum\":2,\"p_g\":0.01,\"c_g\":4.0}\n");

  CHECK(run_cli({"generate", fx("synthetic45.json"), "--out", out.string()}).code == cli::kExitInputError);
}

TEST_CASE("worker count from the environment") {
  const auto out = scratch("env.jsonl");
  ::setenv("SCENFORGE_WORKERS", "zero", 1);
  CHECK(run_cli({"front", fx("table1.json"), "--out", out.string()}).code == cli::kExitInputError);
  CHECK(run_cli({"front", fx("table1.json"), "--out", out.string(), "--workers", "2"}).code == cli::kExitOk);
  ::setenv("SCENFORGE_WORKERS", "2", 1);
  CHECK(run_cli({"front", fx("table1.json"), "--out", out.string()}).code == cli::kExitOk);
  ::unsetenv("SCENFORGE_WORKERS");
}

TEST_CASE("scatter plot edge cases") {
  const FrontResult empty;
  const std::string e = render_scatter(empty);
  CHECK(count_of(e, "<circle") == 0);
  CHECK(e.find("</svg>") != std::string::npos);

  FrontResult one;
  one.points.push_back({Score{-1.0, 3}, {Scenario{"overtaking"}}});
  const std::string s = render_scatter(one);
  CHECK(count_of(s, "<circle") == 1);
  CHECK(s.find("crit_sum=3") != std::string::npos);
  CHECK(render_scatter(one) == s);
}
