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

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace scenforge {

/// A set of feature ids. Members are kept sorted and unique, so the member
/// list is also the canonical serialization and comparison is lexicographic.
class Scenario {
 public:
  Scenario() = default;
  Scenario(std::initializer_list<std::string> ids) : Scenario(std::vector<std::string>(ids)) {}
  explicit Scenario(std::vector<std::string> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<std::string>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(std::string_view id) const {
    return std::binary_search(members_.begin(), members_.end(), id,
                              [](std::string_view a, std::string_view b) { return a < b; });
  }

  friend auto operator<=>(const Scenario&, const Scenario&) = default;
  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::vector<std::string> members_;
};

/// Global scores in log domain: P_g = 10^log10_p, C_g = 2^crit_sum.
struct Score {
  double log10_p = 0.0;
  std::int64_t crit_sum = 0;

  double p_g() const { return std::pow(10.0, log10_p); }
  double c_g() const { return std::ldexp(1.0, static_cast<int>(crit_sum)); }

  friend bool operator==(const Score&, const Score&) = default;
};

}  // namespace scenforge
