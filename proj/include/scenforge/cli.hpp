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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace scenforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;  // UNSAT or min > max
inline constexpr int kExitInputError = 2;

struct RunReport {
  std::string command;
  std::int64_t elapsed_ms = 0;
  std::uint64_t features = 0;
  std::uint64_t constraints = 0;
  std::uint64_t valid_examined = 0;
  std::uint64_t front_points = 0;
  std::uint64_t front_scenarios = 0;
  bool truncated = false;

  std::string to_json() const;
};

/// Runs one command. `args[0]` is the program name. Human-readable output
/// goes to `out`; diagnostics and the JSON run report go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scenforge::cli
