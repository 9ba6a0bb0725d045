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

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace scenforge {

namespace {

using Json = nlohmann::json;

constexpr std::array<double, kProbabilityLevelCount> kDefaultProb = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
constexpr std::array<int, kCriticalityLevelCount> kDefaultRanks = {3, 2, 1};
constexpr std::array<char, kProbabilityLevelCount> kProbLetters = {'A', 'B', 'C', 'D', 'E'};
constexpr std::array<char, kCriticalityLevelCount> kCritLetters = {'A', 'B', 'C'};

void require_only_keys(const Json& object, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (allowed.count(key) == 0) {
      throw CatalogError("unknown field \"" + key + "\" in " + where);
    }
  }
}

const Json& require_object(const Json& parent, const char* key, const std::string& where) {
  auto it = parent.find(key);
  if (it == parent.end()) {
    throw CatalogError("missing field \"" + std::string(key) + "\" in " + where);
  }
  if (!it->is_object()) {
    throw CatalogError("field \"" + std::string(key) + "\" in " + where + " must be an object");
  }
  return *it;
}

std::string require_string(const Json& parent, const char* key, const std::string& where) {
  auto it = parent.find(key);
  if (it == parent.end()) {
    throw CatalogError("missing field \"" + std::string(key) + "\" in " + where);
  }
  if (!it->is_string()) {
    throw CatalogError("field \"" + std::string(key) + "\" in " + where + " must be a string");
  }
  return it->get<std::string>();
}

LevelMapping parse_levels(const Json& levels) {
  require_only_keys(levels, {"probability", "criticality_rank"}, "levels");

  std::array<double, kProbabilityLevelCount> prob = kDefaultProb;
  std::array<int, kCriticalityLevelCount> ranks = kDefaultRanks;

  if (levels.contains("probability")) {
    const Json& block = require_object(levels, "probability", "levels");
    require_only_keys(block, {"A", "B", "C", "D", "E"}, "levels.probability");
    for (std::size_t i = 0; i < kProbabilityLevelCount; ++i) {
      const std::string letter(1, kProbLetters[i]);
      auto it = block.find(letter);
      if (it == block.end()) {
        throw CatalogError("probability level " + letter + " is not mapped");
      }
      if (!it->is_number()) {
        throw CatalogError("probability level " + letter + " must map to a number");
      }
      prob[i] = it->get<double>();
    }
  }
  if (levels.contains("criticality_rank")) {
    const Json& block = require_object(levels, "criticality_rank", "levels");
    require_only_keys(block, {"A", "B", "C"}, "levels.criticality_rank");
    for (std::size_t i = 0; i < kCriticalityLevelCount; ++i) {
      const std::string letter(1, kCritLetters[i]);
      auto it = block.find(letter);
      if (it == block.end()) {
        throw CatalogError("criticality level " + letter + " is not mapped");
      }
      if (!it->is_number_integer()) {
        throw CatalogError("criticality level " + letter + " must map to an integer rank");
      }
      const auto rank = it->get<std::int64_t>();
      if (rank < 1 || rank > 1000) {
        throw CatalogError("criticality level " + letter + " rank " + std::to_string(rank) +
                           " is outside [1, 1000]");
      }
      ranks[i] = static_cast<int>(rank);
    }
  }
  return LevelMapping(prob, ranks);
}

Feature parse_feature(const Json& entry, std::size_t position) {
  const std::string where = "features[" + std::to_string(position) + "]";
  if (!entry.is_object()) {
    throw CatalogError(where + " must be an object");
  }
  Feature f;
  f.id = require_string(entry, "id", where);
  const std::string named = where + " (\"" + f.id + "\")";
  require_only_keys(entry, {"id", "name", "criticality", "probability"}, named);
  f.name = require_string(entry, "name", named);

  const std::string crit = require_string(entry, "criticality", named);
  auto crit_level = parse_criticality_level(crit);
  if (!crit_level) {
    throw CatalogError("unknown criticality level \"" + crit + "\" for feature \"" + f.id + "\"");
  }
  f.criticality = *crit_level;

  const std::string prob = require_string(entry, "probability", named);
  auto prob_level = parse_probability_level(prob);
  if (!prob_level) {
    throw CatalogError("unknown probability level \"" + prob + "\" for feature \"" + f.id + "\"");
  }
  f.probability = *prob_level;
  return f;
}

}  // namespace

std::optional<ProbabilityLevel> parse_probability_level(std::string_view letter) {
  if (letter.size() != 1) return std::nullopt;
  for (std::size_t i = 0; i < kProbabilityLevelCount; ++i) {
    if (letter[0] == kProbLetters[i]) return static_cast<ProbabilityLevel>(i);
  }
  return std::nullopt;
}

std::optional<CriticalityLevel> parse_criticality_level(std::string_view letter) {
  if (letter.size() != 1) return std::nullopt;
  for (std::size_t i = 0; i < kCriticalityLevelCount; ++i) {
    if (letter[0] == kCritLetters[i]) return static_cast<CriticalityLevel>(i);
  }
  return std::nullopt;
}

char to_letter(ProbabilityLevel level) { return kProbLetters[static_cast<std::size_t>(level)]; }
char to_letter(CriticalityLevel level) { return kCritLetters[static_cast<std::size_t>(level)]; }

LevelMapping::LevelMapping() : LevelMapping(kDefaultProb, kDefaultRanks) {}

LevelMapping::LevelMapping(std::array<double, kProbabilityLevelCount> prob_values,
                           std::array<int, kCriticalityLevelCount> crit_ranks)
    : prob_values_(prob_values), crit_ranks_(crit_ranks) {
  for (std::size_t i = 0; i < kProbabilityLevelCount; ++i) {
    const double v = prob_values_[i];
    const std::string letter(1, kProbLetters[i]);
    if (!std::isfinite(v) || v <= 0.0 || v > 1.0) {
      throw CatalogError("probability level " + letter + " value must lie in (0, 1]");
    }
    if (i > 0 && !(v < prob_values_[i - 1])) {
      throw CatalogError("probability level " + letter + " must be strictly less probable than " +
                         std::string(1, kProbLetters[i - 1]));
    }
    log10_values_[i] = std::log10(v);
  }
  for (std::size_t i = 0; i < kCriticalityLevelCount; ++i) {
    const std::string letter(1, kCritLetters[i]);
    if (crit_ranks_[i] < 1) {
      throw CatalogError("criticality level " + letter + " rank must be >= 1");
    }
    if (i > 0 && !(crit_ranks_[i] < crit_ranks_[i - 1])) {
      throw CatalogError("criticality level " + letter + " rank must be strictly below " +
                         std::string(1, kCritLetters[i - 1]));
    }
  }
}

bool LevelMapping::is_default() const {
  return prob_values_ == kDefaultProb && crit_ranks_ == kDefaultRanks;
}

bool is_identifier(std::string_view id) {
  if (id.empty()) return false;
  auto lower_or_underscore = [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; };
  if (!lower_or_underscore(id.front())) return false;
  for (char c : id) {
    if (!lower_or_underscore(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

Catalog::Catalog(std::vector<Feature> features, LevelMapping mapping)
    : features_(std::move(features)), mapping_(mapping) {
  index_.reserve(features_.size());
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const auto& id = features_[i].id;
    if (!is_identifier(id)) {
      throw CatalogError("invalid feature id \"" + id +
                         "\": expected a lowercase letter or '_' followed by [a-z0-9_]");
    }
    if (!index_.emplace(id, i).second) {
      throw CatalogError("duplicate feature id \"" + id + "\"");
    }
  }
}

std::optional<std::size_t> Catalog::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Feature& Catalog::at(std::string_view id) const {
  auto idx = index_of(id);
  if (!idx) throw UnknownFeature("unknown feature id \"" + std::string(id) + "\"");
  return features_[*idx];
}

Catalog load_catalog(std::string_view content) {
  Json doc;
  try {
    doc = Json::parse(content.begin(), content.end());
  } catch (const Json::parse_error& e) {
    throw CatalogError(std::string("malformed catalog JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw CatalogError("catalog must be a JSON object");
  }
  require_only_keys(doc, {"levels", "features"}, "catalog");

  LevelMapping mapping;
  if (doc.contains("levels")) {
    mapping = parse_levels(require_object(doc, "levels", "catalog"));
  }

  auto it = doc.find("features");
  if (it == doc.end()) {
    throw CatalogError("missing field \"features\" in catalog");
  }
  if (!it->is_array()) {
    throw CatalogError("field \"features\" must be an array");
  }
  std::vector<Feature> features;
  features.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    features.push_back(parse_feature((*it)[i], i));
  }
  return Catalog(std::move(features), mapping);
}

Catalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CatalogError(path.string() + ": cannot open catalog file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_catalog(buf.str());
  } catch (const CatalogError& e) {
    throw CatalogError(path.string() + ": " + e.what());
  }
}

std::string emit_catalog(const Catalog& catalog) {
  using Ordered = nlohmann::ordered_json;
  Ordered prob = Ordered::object();
  for (std::size_t i = 0; i < kProbabilityLevelCount; ++i) {
    prob[std::string(1, kProbLetters[i])] = catalog.mapping().prob_values()[i];
  }
  Ordered ranks = Ordered::object();
  for (std::size_t i = 0; i < kCriticalityLevelCount; ++i) {
    ranks[std::string(1, kCritLetters[i])] = catalog.mapping().crit_ranks()[i];
  }
  Ordered features = Ordered::array();
  for (const auto& f : catalog.features()) {
    features.push_back(Ordered{{"id", f.id},
                               {"name", f.name},
                               {"criticality", std::string(1, to_letter(f.criticality))},
                               {"probability", std::string(1, to_letter(f.probability))}});
  }
  Ordered doc = Ordered::object();
  doc["levels"] = Ordered{{"probability", prob}, {"criticality_rank", ranks}};
  doc["features"] = features;
  return doc.dump(2) + "\n";
}

double probability_value(const Catalog& catalog, std::string_view id) {
  return catalog.mapping().probability(catalog.at(id).probability);
}

int criticality_rank(const Catalog& catalog, std::string_view id) {
  return catalog.mapping().rank(catalog.at(id).criticality);
}

}  // namespace scenforge
