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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scenforge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a feature id that the catalog does not contain.
class UnknownFeature : public Error {
 public:
  using Error::Error;
};

/// Malformed catalog file or invalid level mapping.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntax error in a constraint formula. Positions are 1-based.
class FormulaError : public Error {
 public:
  FormulaError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct UnresolvedIdentifier {
  std::string id;
  std::size_t line = 0;  // 0 when the formula has no source line
};

/// Constraint references feature ids that are not in the catalog.
class BindError : public Error {
 public:
  BindError(const std::string& message, std::vector<UnresolvedIdentifier> unresolved)
      : Error(message), unresolved_(std::move(unresolved)) {}

  const std::vector<UnresolvedIdentifier>& unresolved() const noexcept { return unresolved_; }

 private:
  std::vector<UnresolvedIdentifier> unresolved_;
};

/// Generation request that cannot be satisfied by construction (min > max).
class InfeasibleConfig : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested on a catalog above the brute-force limit.
class CatalogTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace scenforge
