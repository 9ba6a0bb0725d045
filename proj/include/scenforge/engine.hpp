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

#include "scenforge/catalog.hpp"
#include "scenforge/constraint.hpp"
#include "scenforge/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace scenforge {

enum class TiePolicy : std::uint8_t {
  AllTies,         // every scenario achieving a front score
  Representative,  // the lexicographically smallest scenario per front score
};

enum class EngineMode : std::uint8_t { BruteForce, BranchAndBound, Auto };

struct GenerationConfig {
  std::size_t min_features = 1;
  /// nullopt means the catalog size; larger values are clamped to it.
  std::optional<std::size_t> max_features;
  TiePolicy tie_policy = TiePolicy::AllTies;
  EngineMode engine_mode = EngineMode::Auto;
  /// Largest catalog that exhaustive enumeration accepts.
  std::size_t brute_force_limit = 25;
  std::size_t worker_count = 1;
  /// AllTies keeps at most this many scenarios per front point (the
  /// lexicographically smallest) and sets FrontResult::truncated beyond it.
  std::size_t max_ties_per_point = 100000;
  /// Branch-and-bound node budget; 0 is unlimited. Hitting it sets truncated.
  std::uint64_t node_limit = 0;
};

/// Catalogs up to this size run exhaustively under EngineMode::Auto.
inline constexpr std::size_t kAutoBruteForceMax = 16;

struct FrontPoint {
  Score score;
  std::vector<Scenario> scenarios;  // lexicographic order

  friend bool operator==(const FrontPoint&, const FrontPoint&) = default;
};

struct FrontResult {
  std::vector<FrontPoint> points;  // log10_p strictly decreasing, crit_sum strictly increasing
  /// Valid scenarios scored during the search. Depends on engine mode and,
  /// with several workers, on pruning order; it is not part of equality.
  std::uint64_t total_valid_examined = 0;
  bool truncated = false;

  std::size_t scenario_count() const {
    std::size_t n = 0;
    for (const auto& p : points) n += p.scenarios.size();
    return n;
  }

  friend bool operator==(const FrontResult& a, const FrontResult& b) {
    return a.points == b.points && a.truncated == b.truncated;
  }
};

/// log10_p = sum of log10 P_i and crit_sum = sum of C_i over the members.
/// Throws UnknownFeature.
Score score(const Scenario& scenario, const Catalog& catalog);

/// Calls `visit` for every valid scenario within the size bounds, ordered by
/// size then lexicographically. Throws CatalogTooLarge above
/// config.brute_force_limit and InfeasibleConfig when min > max.
void for_each_valid(const Catalog& catalog, const ConstraintSet& constraints,
                    const GenerationConfig& config,
                    const std::function<void(const Scenario&)>& visit);

std::vector<Scenario> enumerate_valid(const Catalog& catalog, const ConstraintSet& constraints,
                                      const GenerationConfig& config);

/// Exact Pareto front (both objectives maximized) of the valid scenarios.
/// Throws InfeasibleConfig when min_features > max_features.
FrontResult generate_front(const Catalog& catalog, const ConstraintSet& constraints,
                           const GenerationConfig& config);

/// Some valid scenario within the size bounds, or nullopt.
std::optional<Scenario> check_satisfiable(const Catalog& catalog, const ConstraintSet& constraints,
                                          const GenerationConfig& config);

namespace detail {

/// Branch-and-bound front search that reports every pruned node's partial
/// assignment (indexed by catalog position) to `on_prune`. Single worker.
FrontResult generate_front_traced(const Catalog& catalog, const ConstraintSet& constraints,
                                  const GenerationConfig& config,
                                  const std::function<void(std::span<const Truth>)>& on_prune);

}  // namespace detail

}  // namespace scenforge
