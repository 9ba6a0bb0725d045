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

#pragma once

// Reference front computation for small instances. It walks every bitmask,
// scores with integer arithmetic under the default level mapping, and keeps
// the non-dominated scores by pairwise comparison. Nothing here calls into
// the engine.

#include "scenforge/catalog.hpp"
#include "scenforge/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace scenforge::testing {

struct OracleFeature {
  int prob_level = 0;  // 0..4 for A..E
  int crit_level = 0;  // 0..2 for A..C
};

struct OracleRule {
  enum Shape { kNand, kImplies, kOr } shape = kNand;
  int a = 0, b = 0;

  bool holds(std::uint32_t mask) const {
    const bool x = (mask >> a) & 1u, y = (mask >> b) & 1u;
    switch (shape) {
      case kNand: return !(x && y);
      case kImplies: return !x || y;
      case kOr: return x || y;
    }
    return false;
  }

  std::string text() const {
    const std::string x = "f" + std::to_string(a), y = "f" + std::to_string(b);
    switch (shape) {
      case kNand: return "!(" + x + " & " + y + ")";
      case kImplies: return x + " -> " + y;
      case kOr: return x + " | " + y;
    }
    return "";
  }
};

struct OracleInstance {
  std::vector<OracleFeature> features;
  std::vector<OracleRule> rules;

  Catalog catalog() const {
    std::vector<Feature> fs;
    for (std::size_t i = 0; i < features.size(); ++i) {
      fs.push_back({"f" + std::to_string(i), "F" + std::to_string(i),
                    static_cast<CriticalityLevel>(features[i].crit_level),
                    static_cast<ProbabilityLevel>(features[i].prob_level)});
    }
    return Catalog(std::move(fs), LevelMapping{});
  }

  std::string rules_text() const {
    std::string s;
    for (const auto& r : rules) s += r.text() + "\n";
    return s;
  }
};

inline OracleInstance random_instance(std::mt19937_64& rng, int min_n, int max_n, int max_rules) {
  OracleInstance inst;
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  for (int i = 0; i < n; ++i) {
    inst.features.push_back({std::uniform_int_distribution<int>(0, 4)(rng),
                             std::uniform_int_distribution<int>(0, 2)(rng)});
  }
  const int k = n < 2 ? 0 : std::uniform_int_distribution<int>(0, max_rules)(rng);
  for (int i = 0; i < k; ++i) {
    OracleRule r;
    r.shape = static_cast<OracleRule::Shape>(std::uniform_int_distribution<int>(0, 2)(rng));
    r.a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    do {
      r.b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    } while (r.b == r.a);
    inst.rules.push_back(r);
  }
  return inst;
}

/// One front point: exact integer scores and the sorted member lists.
struct OraclePoint {
  std::int64_t log10_p = 0;
  std::int64_t crit_sum = 0;
  std::vector<std::vector<std::string>> scenarios;

  friend bool operator==(const OraclePoint&, const OraclePoint&) = default;
};

inline std::vector<OraclePoint> oracle_front(const OracleInstance& inst, std::size_t min_size,
                                             std::size_t max_size) {
  const int n = static_cast<int>(inst.features.size());
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::vector<std::string>>> by_score;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < min_size || size > max_size) continue;
    bool ok = true;
    for (const auto& r : inst.rules) ok = ok && r.holds(mask);
    if (!ok) continue;
    std::int64_t lp = 0, cs = 0;
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      lp -= inst.features[i].prob_level + 1;
      cs += 3 - inst.features[i].crit_level;
      ids.push_back("f" + std::to_string(i));
    }
    std::sort(ids.begin(), ids.end());
    by_score[{lp, cs}].push_back(std::move(ids));
  }
  std::vector<OraclePoint> out;
  for (auto& [key, scen] : by_score) {
    bool dominated = false;
    for (const auto& [other, unused] : by_score) {
      if (other.first >= key.first && other.second >= key.second && other != key) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::sort(scen.begin(), scen.end());
    out.push_back({key.first, key.second, scen});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.log10_p > b.log10_p; });
  return out;
}

/// Engine output in the oracle's shape. Scores must be integral here.
inline std::vector<OraclePoint> as_oracle(const FrontResult& result) {
  std::vector<OraclePoint> out;
  for (const auto& p : result.points) {
    OraclePoint o;
    o.log10_p = static_cast<std::int64_t>(p.score.log10_p);
    if (static_cast<double>(o.log10_p) != p.score.log10_p) o.log10_p = INT64_MIN;
    o.crit_sum = p.score.crit_sum;
    for (const auto& s : p.scenarios) o.scenarios.push_back(s.members());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace scenforge::testing
