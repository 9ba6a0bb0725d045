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

// Two-objective Pareto filtering. Both objectives are maximized.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace scenforge::pareto {

template <typename Payload>
struct ScorePoint {
  double p_obj = 0.0;  // probability objective (log10 P_g)
  double c_obj = 0.0;  // criticality objective (crit_sum)
  Payload payload{};
};

/// a dominates b: at least as good on both objectives, strictly better on one.
template <typename A, typename B>
constexpr bool dominates(const ScorePoint<A>& a, const ScorePoint<B>& b) {
  return a.p_obj >= b.p_obj && a.c_obj >= b.c_obj && (a.p_obj > b.p_obj || a.c_obj > b.c_obj);
}

/// Non-dominated subset of `points`, sorted by descending p_obj (ties by
/// descending c_obj). Every copy of a tied non-dominated point is kept, in
/// input order. O(n log n): one sort and one sweep.
///
/// Throws std::invalid_argument on a non-finite objective.
template <typename Payload>
std::vector<ScorePoint<Payload>> front(std::vector<ScorePoint<Payload>> points) {
  for (const auto& p : points) {
    if (!std::isfinite(p.p_obj) || !std::isfinite(p.c_obj)) {
      throw std::invalid_argument("pareto::front: non-finite objective");
    }
  }
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    if (a.p_obj != b.p_obj) return a.p_obj > b.p_obj;
    return a.c_obj > b.c_obj;
  });

  std::vector<ScorePoint<Payload>> kept;
  bool have_best = false;
  double best_c = 0.0;  // max c_obj over points with p_obj >= current, excluding the current run
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i + 1;
    while (j < points.size() && points[j].p_obj == points[i].p_obj &&
           points[j].c_obj == points[i].c_obj) {
      ++j;
    }
    if (!have_best || points[i].c_obj > best_c) {
      for (std::size_t k = i; k < j; ++k) kept.push_back(std::move(points[k]));
      best_c = points[i].c_obj;
      have_best = true;
    }
    i = j;
  }
  return kept;
}

/// Non-dominated union of two fronts.
template <typename Payload>
std::vector<ScorePoint<Payload>> merge(std::vector<ScorePoint<Payload>> a,
                                       std::vector<ScorePoint<Payload>> b) {
  a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return front(std::move(a));
}

}  // namespace scenforge::pareto
