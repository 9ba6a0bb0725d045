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

#include "scenforge/engine.hpp"

#include <string>

namespace scenforge {

/// Shortest decimal text that round-trips to `value`.
std::string format_number(double value);

/// One scenario JSONL record, without the trailing newline:
/// {"features":[...],"log10_p":x,"crit_sum":n,"p_g":x,"c_g":x}
/// p_g underflows to 0.0 for very improbable scenarios; log10_p is authoritative.
std::string scenario_record(const Scenario& scenario, const Score& score);

/// Every scenario of every point, points in front order.
std::string front_jsonl(const FrontResult& front);

/// Header log10_p,crit_sum,scenario_count,representative_features; one row
/// per point, representative ids joined with ';'.
std::string front_csv(const FrontResult& front);

/// Self-contained SVG scatter of the front (x: log10 P_g, y: crit_sum)
/// with the points joined by a staircase. Byte-identical for equal input.
std::string render_scatter(const FrontResult& front);

}  // namespace scenforge
