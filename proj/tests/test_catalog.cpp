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

#include "scenforge/catalog.hpp"
#include "scenforge/error.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace scenforge;
using scenforge::testing::fixture;
using scenforge::testing::read_file;

namespace {

std::string error_of(const std::string& json) {
  try {
    (void)load_catalog(json);
  } catch (const CatalogError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("table1 fixture loads all ten rows with their levels") {
  const Catalog c = load_catalog_file(fixture("table1.json"));
  REQUIRE(c.size() == 10);
  CHECK(c.mapping().is_default());

  CHECK(c.at("curved_road").name == "Curved Road");
  CHECK(c.at("curved_road").criticality == CriticalityLevel::B);
  CHECK(c.at("curved_road").probability == ProbabilityLevel::A);
  CHECK(c.at("overtaking").criticality == CriticalityLevel::A);
  CHECK(c.at("overtaking").probability == ProbabilityLevel::A);
  CHECK(c.at("cem").criticality == CriticalityLevel::A);
  CHECK(c.at("cem").probability == ProbabilityLevel::E);
  CHECK(c.at("safety_distance_violation").criticality == CriticalityLevel::C);

  // File order is preserved.
  CHECK(c.features().front().id == "curved_road");
  CHECK(c.features().back().id == "safety_distance_violation");
}

TEST_CASE("empty catalog gets the default mapping") {
  const Catalog c = load_catalog(R"({"features": []})");
  CHECK(c.empty());
  CHECK(c.mapping() == LevelMapping{});
}

TEST_CASE("duplicate ids are rejected by name") {
  const std::string msg = error_of(R"({"features": [
    {"id":"overtaking","name":"Overtaking","criticality":"A","probability":"A"},
    {"id":"overtaking","name":"Overtaking again","criticality":"B","probability":"B"}]})");
  CHECK(msg.find("duplicate") != std::string::npos);
  CHECK(msg.find("\"overtaking\"") != std::string::npos);
}

TEST_CASE("default mapping values") {
  const Catalog c = load_catalog(R"({"features": [
    {"id":"a","name":"a","criticality":"A","probability":"A"},
    {"id":"e","name":"e","criticality":"C","probability":"E"}]})");
  CHECK(probability_value(c, "a") == 0.1);
  CHECK(probability_value(c, "e") == 0.00001);
  CHECK(criticality_rank(c, "a") == 3);
  CHECK(criticality_rank(c, "e") == 1);
  CHECK(c.mapping().log10_probability(ProbabilityLevel::A) == -1.0);
  CHECK(c.mapping().log10_probability(ProbabilityLevel::E) == -5.0);
  CHECK_THROWS_AS(probability_value(c, "zzz"), UnknownFeature);
  CHECK_THROWS_AS(criticality_rank(c, "zzz"), UnknownFeature);
}

TEST_CASE("custom mapping lookups") {
  const Catalog c = load_catalog(R"({
    "levels": {"probability": {"A":0.5,"B":0.25,"C":0.125,"D":0.0625,"E":0.03125},
               "criticality_rank": {"A":5,"B":3,"C":1}},
    "features": [
      {"id":"x","name":"x","criticality":"B","probability":"A"}]})");
  CHECK(probability_value(c, "x") == 0.5);
  CHECK(criticality_rank(c, "x") == 3);
}

TEST_CASE("levels block may give only one of the two tables") {
  const Catalog c = load_catalog(R"({
    "levels": {"criticality_rank": {"A":10,"B":4,"C":2}},
    "features": [{"id":"x","name":"x","criticality":"A","probability":"B"}]})");
  CHECK(criticality_rank(c, "x") == 10);
  CHECK(probability_value(c, "x") == 0.01);
}

TEST_CASE("malformed catalogs name the offending element") {
  SUBCASE("unknown level letter") {
    const auto msg = error_of(R"({"features":[{"id":"fog","name":"Fog","criticality":"D","probability":"A"}]})");
    CHECK(msg.find("\"D\"") != std::string::npos);
    CHECK(msg.find("\"fog\"") != std::string::npos);
  }
  SUBCASE("unknown probability letter") {
    const auto msg = error_of(R"({"features":[{"id":"fog","name":"Fog","criticality":"A","probability":"F"}]})");
    CHECK(msg.find("\"F\"") != std::string::npos);
  }
  SUBCASE("non-monotone probability mapping") {
    const auto msg = error_of(R"({"levels":{"probability":{"A":0.1,"B":0.2,"C":0.001,"D":0.0001,"E":0.00001}},"features":[]})");
    CHECK(msg.find("level B") != std::string::npos);
  }
  SUBCASE("probability above one") {
    const auto msg = error_of(R"({"levels":{"probability":{"A":1.5,"B":0.2,"C":0.1,"D":0.01,"E":0.001}},"features":[]})");
    CHECK(msg.find("level A") != std::string::npos);
  }
  SUBCASE("zero probability") {
    const auto msg = error_of(R"({"levels":{"probability":{"A":0.5,"B":0.2,"C":0.1,"D":0.01,"E":0}},"features":[]})");
    CHECK(msg.find("level E") != std::string::npos);
  }
  SUBCASE("missing level") {
    const auto msg = error_of(R"({"levels":{"probability":{"A":0.5,"B":0.2,"C":0.1,"D":0.01}},"features":[]})");
    CHECK(msg.find("level E") != std::string::npos);
  }
  SUBCASE("non-monotone ranks") {
    const auto msg = error_of(R"({"levels":{"criticality_rank":{"A":2,"B":2,"C":1}},"features":[]})");
    CHECK(msg.find("level B") != std::string::npos);
  }
  SUBCASE("rank below one") {
    const auto msg = error_of(R"({"levels":{"criticality_rank":{"A":3,"B":1,"C":0}},"features":[]})");
    CHECK(msg.find("level C") != std::string::npos);
  }
  SUBCASE("fractional rank") {
    const auto msg = error_of(R"({"levels":{"criticality_rank":{"A":3,"B":2.5,"C":1}},"features":[]})");
    CHECK(msg.find("level B") != std::string::npos);
  }
  SUBCASE("unknown feature field") {
    const auto msg = error_of(R"({"features":[{"id":"fog","name":"Fog","criticality":"A","probability":"A","prob":"A"}]})");
    CHECK(msg.find("\"prob\"") != std::string::npos);
  }
  SUBCASE("unknown top-level field") {
    CHECK(error_of(R"({"feature":[]})").find("\"feature\"") != std::string::npos);
  }
  SUBCASE("invalid identifier") {
    const auto msg = error_of(R"({"features":[{"id":"Fog","name":"Fog","criticality":"A","probability":"A"}]})");
    CHECK(msg.find("\"Fog\"") != std::string::npos);
  }
  SUBCASE("missing name") {
    const auto msg = error_of(R"({"features":[{"id":"fog","criticality":"A","probability":"A"}]})");
    CHECK(msg.find("\"name\"") != std::string::npos);
  }
  SUBCASE("syntax error") {
    CHECK(error_of(R"({"features": [)").find("malformed") != std::string::npos);
  }
  SUBCASE("missing features") {
    CHECK(error_of(R"({})").find("\"features\"") != std::string::npos);
  }
}

TEST_CASE("file errors carry the path") {
  try {
    (void)load_catalog_file("/nonexistent/catalog.json");
    FAIL("expected an error");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/catalog.json") != std::string::npos);
  }
}

TEST_CASE("identifier rule") {
  CHECK(is_identifier("fog"));
  CHECK(is_identifier("_x1"));
  CHECK(is_identifier("speed_bump"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("1fog"));
  CHECK_FALSE(is_identifier("Fog"));
  CHECK_FALSE(is_identifier("speed bump"));
  CHECK_FALSE(is_identifier("speed-bump"));
}

TEST_CASE("property: emit/load round trip and repeat loads are stable") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 5> prob{};
    double v = 1.0;
    for (auto& p : prob) {
      v *= frac(rng);
      p = v;
    }
    const LevelMapping mapping(prob, {7, 4, 1});
    const Catalog original = scenforge::testing::random_catalog(static_cast<std::size_t>(trial % 12), rng,
                                                                trial % 2 ? mapping : LevelMapping{});
    const std::string text = emit_catalog(original);
    const Catalog once = load_catalog(text);
    CHECK(once == original);
    CHECK(load_catalog(emit_catalog(once)) == once);
    CHECK(load_catalog(text) == once);
  }
}

TEST_CASE("property: mapped values are ordered along the level order") {
  const LevelMapping m;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      CHECK(m.probability(static_cast<ProbabilityLevel>(a)) > m.probability(static_cast<ProbabilityLevel>(b)));
    }
  }
  CHECK(m.rank(CriticalityLevel::A) > m.rank(CriticalityLevel::B));
  CHECK(m.rank(CriticalityLevel::B) > m.rank(CriticalityLevel::C));
}

TEST_CASE("a catalog shaped like extraction output validates") {
  // Placeholder C/C levels and "_2" disambiguation suffixes.
  const Catalog c = load_catalog(R"({"features":[
    {"id":"fog","name":"fog","criticality":"C","probability":"C"},
    {"id":"fog_2","name":"fog","criticality":"C","probability":"C"},
    {"id":"speed_bump","name":"speed bump","criticality":"C","probability":"C"}]})");
  CHECK(c.size() == 3);
  CHECK(probability_value(c, "fog_2") == 0.001);
}

TEST_CASE("loader accepts the emitted form of the table1 fixture") {
  const std::string raw = read_file(fixture("table1.json"));
  const Catalog c = load_catalog(raw);
  CHECK(load_catalog(emit_catalog(c)) == c);
}
