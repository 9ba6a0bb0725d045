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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scenforge {

// Qualitative probability-of-occurrence level, A (most probable) to E.
enum class ProbabilityLevel : std::uint8_t { A = 0, B, C, D, E };

// Qualitative criticality level, A (most critical) to C.
enum class CriticalityLevel : std::uint8_t { A = 0, B, C };

inline constexpr std::size_t kProbabilityLevelCount = 5;
inline constexpr std::size_t kCriticalityLevelCount = 3;

std::optional<ProbabilityLevel> parse_probability_level(std::string_view letter);
std::optional<CriticalityLevel> parse_criticality_level(std::string_view letter);
char to_letter(ProbabilityLevel level);
char to_letter(CriticalityLevel level);

/// Numeric interpretation of the qualitative levels.
///
/// Probability values must lie in (0, 1] and strictly decrease from A to E.
/// Criticality ranks are exponents of the 2^rank criticality weight; they
/// must be >= 1 and strictly decrease from A to C.
class LevelMapping {
 public:
  /// Decade ladder 1e-1 .. 1e-5 and ranks 3/2/1.
  LevelMapping();

  /// Throws CatalogError naming the offending level when the invariants fail.
  LevelMapping(std::array<double, kProbabilityLevelCount> prob_values,
               std::array<int, kCriticalityLevelCount> crit_ranks);

  double probability(ProbabilityLevel level) const {
    return prob_values_[static_cast<std::size_t>(level)];
  }
  /// log10 of probability(level), computed once at construction.
  double log10_probability(ProbabilityLevel level) const {
    return log10_values_[static_cast<std::size_t>(level)];
  }
  int rank(CriticalityLevel level) const { return crit_ranks_[static_cast<std::size_t>(level)]; }

  const std::array<double, kProbabilityLevelCount>& prob_values() const { return prob_values_; }
  const std::array<int, kCriticalityLevelCount>& crit_ranks() const { return crit_ranks_; }

  bool is_default() const;

  friend bool operator==(const LevelMapping& a, const LevelMapping& b) {
    return a.prob_values_ == b.prob_values_ && a.crit_ranks_ == b.crit_ranks_;
  }

 private:
  std::array<double, kProbabilityLevelCount> prob_values_;
  std::array<double, kProbabilityLevelCount> log10_values_;
  std::array<int, kCriticalityLevelCount> crit_ranks_;
};

struct Feature {
  std::string id;
  std::string name;
  CriticalityLevel criticality = CriticalityLevel::C;
  ProbabilityLevel probability = ProbabilityLevel::A;

  friend bool operator==(const Feature&, const Feature&) = default;
};

/// True when `id` is a valid feature identifier: [a-z_][a-z0-9_]*.
bool is_identifier(std::string_view id);

/// Immutable, validated feature catalog. Iteration order is file order.
class Catalog {
 public:
  Catalog() = default;

  /// Throws CatalogError on an invalid or duplicate id.
  Catalog(std::vector<Feature> features, LevelMapping mapping);

  const std::vector<Feature>& features() const { return features_; }
  const LevelMapping& mapping() const { return mapping_; }
  std::size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return index_of(id).has_value(); }

  /// Throws UnknownFeature.
  const Feature& at(std::string_view id) const;

  friend bool operator==(const Catalog& a, const Catalog& b) {
    return a.features_ == b.features_ && a.mapping_ == b.mapping_;
  }

 private:
  std::vector<Feature> features_;
  LevelMapping mapping_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses and validates catalog JSON. Unknown fields are rejected.
Catalog load_catalog(std::string_view content);

/// Reads `path` and loads it; error messages are prefixed with the path.
Catalog load_catalog_file(const std::filesystem::path& path);

/// Serializes to the catalog file format, always including the levels block.
std::string emit_catalog(const Catalog& catalog);

/// Mapped probability P_i of feature `id`. Throws UnknownFeature.
double probability_value(const Catalog& catalog, std::string_view id);

/// Mapped criticality rank C_i of feature `id`. Throws UnknownFeature.
int criticality_rank(const Catalog& catalog, std::string_view id);

}  // namespace scenforge
