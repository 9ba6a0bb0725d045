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
#include "scenforge/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scenforge {

/// Immutable propositional formula over feature ids. Copies share the tree.
class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Not, And, Or, Implies };

  static Formula var(std::string id);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);

  Kind kind() const;
  /// Identifier of a Var node; empty for other kinds.
  const std::string& id() const;
  /// Operand of Not, or left operand of a binary node.
  const Formula& left() const;
  const Formula& right() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses one formula:
///   implication = disjunction [ "->" implication ]
///   disjunction = conjunction { "|" conjunction }
///   conjunction = unary { "&" unary }
///   unary       = "!" unary | "(" implication ")" | identifier
/// Throws FormulaError (line 1) with the offending column.
Formula parse_formula(std::string_view text);

/// Fully parenthesized rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& formula);

/// Identifiers in first-occurrence order, without duplicates.
std::vector<std::string> identifiers(const Formula& formula);

/// Var(id) is true iff id is a member of `scenario`.
bool evaluate(const Formula& formula, const Scenario& scenario);

/// A formula together with the constraint-file line it came from.
struct ConstraintSource {
  Formula formula;
  std::string text;
  std::size_t line = 0;
};

/// Parses constraint-file text: one formula per line, blank lines and lines
/// starting with '#' skipped. FormulaError carries the file line.
std::vector<ConstraintSource> parse_constraints(std::string_view content);

/// Throws Error prefixed with "<path>:<line>:<column>:" on failure.
std::vector<ConstraintSource> load_constraints_file(const std::filesystem::path& path);

enum class Truth : std::uint8_t { False = 0, True = 1, Unknown = 2 };

/// Formulas bound to one catalog. Variables are resolved to catalog indices
/// and each formula is compiled to a postfix program for fast evaluation.
class ConstraintSet {
 public:
  ConstraintSet() = default;

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  /// Number of features in the catalog the set was bound against.
  std::size_t domain_size() const { return domain_size_; }

  const std::vector<Formula>& formulas() const { return formulas_; }
  const std::vector<std::string>& source_lines() const { return source_lines_; }

  /// `membership[i]` != 0 means catalog feature i is in the scenario.
  bool evaluate(std::size_t formula_index, std::span<const std::uint8_t> membership) const;
  bool satisfied_by(std::span<const std::uint8_t> membership) const;

  /// Kleene three-valued evaluation under a partial assignment.
  Truth evaluate3(std::size_t formula_index, std::span<const Truth> state) const;

  /// Catalog indices referenced by a formula.
  const std::vector<std::size_t>& variables(std::size_t formula_index) const {
    return compiled_[formula_index].vars;
  }
  /// Formulas that reference catalog index `var`.
  const std::vector<std::size_t>& watchers(std::size_t var) const { return watchers_[var]; }

 private:
  struct Op {
    Formula::Kind kind;
    std::uint32_t var;
  };
  struct Program {
    std::vector<Op> ops;
    std::vector<std::size_t> vars;
  };

  friend ConstraintSet bind_constraints(const std::vector<ConstraintSource>&, const Catalog&);

  std::size_t domain_size_ = 0;
  std::vector<Formula> formulas_;
  std::vector<std::string> source_lines_;
  std::vector<Program> compiled_;
  std::vector<std::vector<std::size_t>> watchers_;
};

/// Resolves every identifier against `catalog`. Throws BindError listing each
/// unresolved id with its source line.
ConstraintSet bind_constraints(const std::vector<ConstraintSource>& sources, const Catalog& catalog);
ConstraintSet bind_constraints(const std::vector<Formula>& formulas, const Catalog& catalog);

/// Per-feature True/False/Unknown state over a catalog's feature indices.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::size_t domain_size)
      : values_(domain_size, Truth::Unknown) {}
  static PartialAssignment for_catalog(const Catalog& catalog) {
    return PartialAssignment(catalog.size());
  }

  std::size_t size() const { return values_.size(); }
  Truth get(std::size_t index) const { return values_.at(index); }
  void set(std::size_t index, Truth value) { values_.at(index) = value; }
  /// Throws UnknownFeature.
  Truth get(const Catalog& catalog, std::string_view id) const;
  void set(const Catalog& catalog, std::string_view id, Truth value);

  std::span<const Truth> values() const { return values_; }
  std::vector<Truth>& mutable_values() { return values_; }

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  std::vector<Truth> values_;
};

/// The assigned part of a partial assignment already violates a formula.
struct Conflict {
  std::size_t formula_index = 0;
  friend bool operator==(const Conflict&, const Conflict&) = default;
};

using PropagationResult = std::variant<PartialAssignment, Conflict>;

/// Fixpoint of unit propagation. A variable is forced to v when giving it
/// the opposite value makes some formula false under three-valued
/// evaluation. Returns Conflict when a formula is false or both values of a
/// variable falsify it. Throws Error if the domain size does not match.
PropagationResult propagate(const ConstraintSet& constraints, PartialAssignment partial);

namespace detail {

/// In-place propagation used by the search. When `changed` is empty every
/// formula is examined, otherwise only formulas watching the changed
/// variables (and transitively, the variables they force). Returns the
/// index of a violated formula, or nullopt at a conflict-free fixpoint.
std::optional<std::size_t> propagate_in_place(const ConstraintSet& constraints,
                                              std::vector<Truth>& state,
                                              std::span<const std::size_t> changed);

}  // namespace detail

}  // namespace scenforge
