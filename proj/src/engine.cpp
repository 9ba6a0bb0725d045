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

#include "scenforge/engine.hpp"

#include "scenforge/error.hpp"
#include "scenforge/pareto.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace scenforge {

namespace {

// Sorted lexicographic ranks of the member ids. Comparing keys compares the
// canonical (sorted id list) serializations.
using Key = std::vector<std::uint16_t>;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Added to optimistic probability bounds so rounding never causes a prune.
constexpr double kBoundSlack = 1e-9;

struct Tally {
  std::array<std::uint32_t, kProbabilityLevelCount> counts{};
  std::int64_t crit = 0;
  std::size_t size = 0;
};

// Summing per-level counts in a fixed level order makes the probability
// objective a function of the level histogram only, so equal scores are
// bit-identical whichever path computed them.
Score to_score(const Tally& t, const std::array<double, kProbabilityLevelCount>& log10_values) {
  double log10_p = 0.0;
  for (std::size_t l = 0; l < kProbabilityLevelCount; ++l) {
    if (t.counts[l] != 0) log10_p += static_cast<double>(t.counts[l]) * log10_values[l];
  }
  return {log10_p, t.crit};
}

struct Problem {
  const Catalog* catalog = nullptr;
  const ConstraintSet* constraints = nullptr;
  std::size_t n = 0;
  std::size_t min_k = 0;
  std::size_t max_k = 0;
  std::vector<int> rank;
  std::vector<std::uint8_t> level;
  std::array<double, kProbabilityLevelCount> log10_values{};
  std::vector<std::uint16_t> lex_rank;  // catalog index -> rank among sorted ids
  std::vector<std::size_t> by_lex;      // rank -> catalog index

  void add(Tally& t, std::size_t i) const {
    ++t.counts[level[i]];
    t.crit += rank[i];
    ++t.size;
  }

  Scenario to_scenario(const Key& key) const {
    std::vector<std::string> ids;
    ids.reserve(key.size());
    for (auto r : key) ids.push_back(catalog->features()[by_lex[r]].id);
    return Scenario(std::move(ids));
  }
};

Problem make_problem(const Catalog& catalog, const ConstraintSet& constraints,
                     const GenerationConfig& config) {
  if (!constraints.empty() && constraints.domain_size() != catalog.size()) {
    throw Error("constraint set was bound to a catalog of " +
                std::to_string(constraints.domain_size()) + " features, not " +
                std::to_string(catalog.size()));
  }
  if (catalog.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error("catalog exceeds 65535 features");
  }
  if (config.worker_count == 0) {
    throw Error("worker_count must be positive");
  }
  Problem p;
  p.catalog = &catalog;
  p.constraints = &constraints;
  p.n = catalog.size();
  p.min_k = config.min_features;
  p.max_k = std::min(config.max_features.value_or(p.n), p.n);
  if (p.min_k > p.max_k) {
    throw InfeasibleConfig("min_features (" + std::to_string(p.min_k) +
                           ") exceeds max_features (" + std::to_string(p.max_k) + ")");
  }
  const auto& mapping = catalog.mapping();
  for (std::size_t l = 0; l < kProbabilityLevelCount; ++l) {
    p.log10_values[l] = mapping.log10_probability(static_cast<ProbabilityLevel>(l));
  }
  p.rank.reserve(p.n);
  p.level.reserve(p.n);
  for (const auto& f : catalog.features()) {
    p.rank.push_back(mapping.rank(f.criticality));
    p.level.push_back(static_cast<std::uint8_t>(f.probability));
  }
  p.by_lex.resize(p.n);
  std::iota(p.by_lex.begin(), p.by_lex.end(), std::size_t{0});
  std::sort(p.by_lex.begin(), p.by_lex.end(), [&](std::size_t a, std::size_t b) {
    return catalog.features()[a].id < catalog.features()[b].id;
  });
  p.lex_rank.resize(p.n);
  for (std::size_t r = 0; r < p.n; ++r) p.lex_rank[p.by_lex[r]] = static_cast<std::uint16_t>(r);
  return p;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

// Visits valid subsets by size, then lexicographically by sorted ids.
template <typename Visit>
void enumerate_keys(const Problem& p, Visit&& visit) {
  std::vector<std::uint8_t> membership(p.n, 0);
  Key combo;
  for (std::size_t k = p.min_k; k <= p.max_k; ++k) {
    combo.resize(k);
    std::iota(combo.begin(), combo.end(), std::uint16_t{0});
    while (true) {
      std::fill(membership.begin(), membership.end(), 0);
      Tally t;
      for (auto r : combo) {
        membership[p.by_lex[r]] = 1;
        p.add(t, p.by_lex[r]);
      }
      if (p.constraints->satisfied_by(membership)) visit(combo, t);

      // Next k-combination of [0, n) in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == p.n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = static_cast<std::uint16_t>(combo[j - 1] + 1);
    }
  }
}

void require_brute_force_size(const Problem& p, const GenerationConfig& config) {
  if (p.n > config.brute_force_limit) {
    throw CatalogTooLarge("catalog has " + std::to_string(p.n) +
                          " features, above the exhaustive enumeration limit of " +
                          std::to_string(config.brute_force_limit) +
                          "; use the branch-and-bound engine");
  }
}

std::size_t tie_cap(const GenerationConfig& config) {
  return config.tie_policy == TiePolicy::Representative ? 1 : std::max<std::size_t>(config.max_ties_per_point, 1);
}

FrontResult brute_force_front(const Problem& p, const GenerationConfig& config) {
  require_brute_force_size(p, config);
  const std::size_t cap = tie_cap(config);
  const bool flag_overflow = config.tie_policy == TiePolicy::AllTies;

  using Point = pareto::ScorePoint<Key>;
  std::vector<Point> buffer;
  std::map<std::pair<double, std::int64_t>, bool> overflowed;
  FrontResult result;

  // Runs of equal score are contiguous in pareto::front output.
  auto compact = [&] {
    buffer = pareto::front(std::move(buffer));
    std::vector<Point> capped;
    capped.reserve(buffer.size());
    std::size_t i = 0;
    while (i < buffer.size()) {
      std::size_t j = i + 1;
      while (j < buffer.size() && buffer[j].p_obj == buffer[i].p_obj &&
             buffer[j].c_obj == buffer[i].c_obj) {
        ++j;
      }
      std::sort(buffer.begin() + static_cast<std::ptrdiff_t>(i),
                buffer.begin() + static_cast<std::ptrdiff_t>(j),
                [](const Point& a, const Point& b) { return a.payload < b.payload; });
      const std::size_t keep = std::min(j - i, cap);
      if (j - i > cap && flag_overflow) {
        overflowed[{buffer[i].p_obj, static_cast<std::int64_t>(buffer[i].c_obj)}] = true;
      }
      for (std::size_t k = i; k < i + keep; ++k) capped.push_back(std::move(buffer[k]));
      i = j;
    }
    buffer = std::move(capped);
  };

  enumerate_keys(p, [&](const Key& key, const Tally& t) {
    ++result.total_valid_examined;
    const Score s = to_score(t, p.log10_values);
    buffer.push_back({s.log10_p, static_cast<double>(s.crit_sum), key});
    if (buffer.size() >= (1u << 16)) compact();
  });
  compact();

  for (const auto& pt : buffer) {
    const Score s{pt.p_obj, static_cast<std::int64_t>(pt.c_obj)};
    if (result.points.empty() || !(result.points.back().score == s)) {
      result.points.push_back({s, {}});
      if (overflowed.count({s.log10_p, s.crit_sum})) result.truncated = true;
    }
    result.points.back().scenarios.push_back(p.to_scenario(pt.payload));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

struct ScoreKeyLess {
  bool operator()(const Score& a, const Score& b) const {
    if (a.log10_p != b.log10_p) return a.log10_p > b.log10_p;
    return a.crit_sum < b.crit_sum;
  }
};

// Scores sorted by descending log10_p; on a non-dominated set crit_sum then
// ascends, so the strongest candidate dominator of (p, c) is the last entry
// with log10_p >= p.
bool strictly_dominated(const std::vector<Score>& sorted_front, double p, std::int64_t c) {
  auto it = std::partition_point(sorted_front.begin(), sorted_front.end(),
                                 [&](const Score& s) { return s.log10_p >= p; });
  if (it == sorted_front.begin()) return false;
  const Score& q = *(it - 1);
  return q.crit_sum >= c && (q.log10_p > p || q.crit_sum > c);
}

// Inserts s into a sorted non-dominated score list. Returns false when s is
// dominated by or equal to an existing entry.
bool insert_score(std::vector<Score>& sorted_front, const Score& s) {
  auto it = std::partition_point(sorted_front.begin(), sorted_front.end(),
                                 [&](const Score& q) { return q.log10_p >= s.log10_p; });
  if (it != sorted_front.begin()) {
    const Score& q = *(it - 1);
    if (q.crit_sum >= s.crit_sum) return false;
  }
  std::erase_if(sorted_front, [&](const Score& q) {
    return q.log10_p <= s.log10_p && q.crit_sum <= s.crit_sum;
  });
  sorted_front.insert(std::lower_bound(sorted_front.begin(), sorted_front.end(), s, ScoreKeyLess{}), s);
  return true;
}

// Scores published by all workers, used only for pruning.
class SharedFront {
 public:
  void publish(const Score& s) {
    std::lock_guard lock(mutex_);
    if (insert_score(front_, s)) version_.fetch_add(1, std::memory_order_release);
  }

  // Refreshes `local` when the shared front has changed since `seen`.
  void sync(std::vector<Score>& local, std::uint64_t& seen) const {
    const auto v = version_.load(std::memory_order_acquire);
    if (v == seen) return;
    std::lock_guard lock(mutex_);
    local = front_;
    seen = version_.load(std::memory_order_relaxed);
  }

 private:
  mutable std::mutex mutex_;
  std::vector<Score> front_;
  std::atomic<std::uint64_t> version_{0};
};

// A worker's own front with the scenarios behind each point.
class Archive {
 public:
  struct Point {
    Score score;
    std::set<Key> keys;
    bool overflow = false;
  };

  Archive(std::size_t cap, bool flag_overflow) : cap_(cap), flag_overflow_(flag_overflow) {}

  bool dominated(const Score& s) const {
    auto it = locate(s);
    if (it == points_.begin()) return false;
    const Score& q = (it - 1)->score;
    return q.crit_sum >= s.crit_sum && !(q == s);
  }

  // Returns true when s opens a new front point.
  bool insert(const Score& s, Key key) {
    Point pt{s, {}, false};
    pt.keys.insert(std::move(key));
    return insert_point(std::move(pt));
  }

  void merge(Archive&& other) {
    for (auto& pt : other.points_) insert_point(std::move(pt));
    other.points_.clear();
  }

  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point>::const_iterator locate(const Score& s) const {
    return std::partition_point(points_.begin(), points_.end(),
                                [&](const Point& q) { return q.score.log10_p >= s.log10_p; });
  }

  bool insert_point(Point pt) {
    auto it = locate(pt.score);
    if (it != points_.begin()) {
      const auto idx = static_cast<std::size_t>(it - points_.begin()) - 1;
      Point& q = points_[idx];
      if (q.score == pt.score) {
        q.keys.merge(pt.keys);
        q.overflow = q.overflow || pt.overflow;
        trim(q);
        return false;
      }
      if (q.score.crit_sum >= pt.score.crit_sum) return false;
    }
    std::erase_if(points_, [&](const Point& q) {
      return q.score.log10_p <= pt.score.log10_p && q.score.crit_sum <= pt.score.crit_sum;
    });
    trim(pt);
    auto pos = std::partition_point(points_.begin(), points_.end(), [&](const Point& q) {
      return q.score.log10_p > pt.score.log10_p;
    });
    points_.insert(pos, std::move(pt));
    return true;
  }

  void trim(Point& pt) const {
    while (pt.keys.size() > cap_) {
      pt.keys.erase(std::prev(pt.keys.end()));
      if (flag_overflow_) pt.overflow = true;
    }
  }

  std::size_t cap_;
  bool flag_overflow_;
  std::vector<Point> points_;
};

// Branching order plus, for every depth, the cheapest probability cost of
// adding exactly v criticality from the features not yet branched on.
struct BoundTables {
  std::vector<std::size_t> order;
  std::vector<std::vector<double>> min_cost;

  explicit BoundTables(const Problem& p) {
    order.resize(p.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (p.rank[a] != p.rank[b]) return p.rank[a] > p.rank[b];
      return p.level[a] < p.level[b];
    });
    min_cost.resize(p.n + 1);
    min_cost[p.n] = {0.0};
    for (std::size_t k = p.n; k-- > 0;) {
      const std::size_t f = order[k];
      const auto r = static_cast<std::size_t>(p.rank[f]);
      const double cost = -p.log10_values[p.level[f]];
      const auto& next = min_cost[k + 1];
      std::vector<double> row(next.size() + r, kInf);
      for (std::size_t v = 0; v < next.size(); ++v) {
        row[v] = std::min(row[v], next[v]);
        if (next[v] < kInf) row[v + r] = std::min(row[v + r], next[v] + cost);
      }
      min_cost[k] = std::move(row);
    }
  }
};

enum class Goal : std::uint8_t { Front, Witness };

struct SearchShared {
  const Problem* problem = nullptr;
  const BoundTables* tables = nullptr;
  SharedFront* front = nullptr;
  std::uint64_t node_limit = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> hit_node_limit{false};
  const std::function<void(std::span<const Truth>)>* on_prune = nullptr;
};

class Search {
 public:
  Search(SearchShared& shared, Goal goal, Archive* archive)
      : shared_(shared), p_(*shared.problem), goal_(goal), archive_(archive) {}

  void visit(std::vector<Truth> state, std::size_t pos) {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (shared_.node_limit != 0 &&
        shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.node_limit) {
      shared_.hit_node_limit = true;
      shared_.stop = true;
      return;
    }

    const auto& order = shared_.tables->order;
    while (pos < p_.n && state[order[pos]] != Truth::Unknown) ++pos;

    Tally t;
    std::size_t unknown = 0;
    for (std::size_t i = 0; i < p_.n; ++i) {
      if (state[i] == Truth::True) p_.add(t, i);
      else if (state[i] == Truth::Unknown) ++unknown;
    }
    if (t.size > p_.max_k || t.size + unknown < p_.min_k) return;
    if (unknown == 0) {
      leaf(state, t);
      return;
    }
    if (t.size == p_.max_k) {
      std::vector<std::size_t> changed;
      for (std::size_t i = 0; i < p_.n; ++i) {
        if (state[i] == Truth::Unknown) {
          state[i] = Truth::False;
          changed.push_back(i);
        }
      }
      if (!detail::propagate_in_place(*p_.constraints, state, changed)) leaf(state, t);
      return;
    }
    if (goal_ == Goal::Front && prunable(pos, to_score(t, p_.log10_values))) {
      if (shared_.on_prune != nullptr && *shared_.on_prune) (*shared_.on_prune)(state);
      return;
    }

    const std::size_t var = order[pos];
    // Front search includes first to reach high-criticality anchors early;
    // witness search excludes first to find small witnesses.
    const std::array<Truth, 2> values = goal_ == Goal::Front
                                            ? std::array{Truth::True, Truth::False}
                                            : std::array{Truth::False, Truth::True};
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<Truth> child;
      if (b == 0) child = state;
      else child = std::move(state);
      child[var] = values[b];
      const std::array<std::size_t, 1> changed{var};
      if (!detail::propagate_in_place(*p_.constraints, child, changed)) {
        visit(std::move(child), pos + 1);
      }
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  std::uint64_t examined() const { return examined_; }
  const std::optional<Key>& witness() const { return witness_; }

 private:
  void leaf(const std::vector<Truth>& state, const Tally& t) {
    std::vector<std::uint8_t> membership(p_.n);
    for (std::size_t i = 0; i < p_.n; ++i) membership[i] = state[i] == Truth::True ? 1 : 0;
    if (!p_.constraints->satisfied_by(membership)) {
      throw std::logic_error("search reached a leaf that violates a constraint");
    }
    ++examined_;
    Key key;
    key.reserve(t.size);
    if (goal_ == Goal::Witness) {
      for (std::size_t i = 0; i < p_.n; ++i) {
        if (membership[i]) key.push_back(p_.lex_rank[i]);
      }
      std::sort(key.begin(), key.end());
      witness_ = std::move(key);
      shared_.stop = true;
      return;
    }
    const Score s = to_score(t, p_.log10_values);
    if (archive_->dominated(s)) return;
    for (std::size_t i = 0; i < p_.n; ++i) {
      if (membership[i]) key.push_back(p_.lex_rank[i]);
    }
    std::sort(key.begin(), key.end());
    if (archive_->insert(s, std::move(key))) shared_.front->publish(s);
  }

  // A node is pruned when every point of its optimistic bound set is
  // strictly dominated by a known front score. The bound set relaxes the
  // constraints: each reachable criticality gain v from the unbranched
  // features is paired with the highest probability that can carry it.
  bool prunable(std::size_t pos, const Score& current) {
    shared_.front->sync(snapshot_, seen_version_);
    if (snapshot_.empty()) return false;
    const auto& row = shared_.tables->min_cost[pos];
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (row[v] == kInf) continue;
      const double p_bound = current.log10_p - row[v] + kBoundSlack;
      const std::int64_t c_bound = current.crit_sum + static_cast<std::int64_t>(v);
      if (!strictly_dominated(snapshot_, p_bound, c_bound)) return false;
    }
    return true;
  }

  SearchShared& shared_;
  const Problem& p_;
  Goal goal_;
  Archive* archive_;
  std::vector<Score> snapshot_;
  std::uint64_t seen_version_ = 0;
  std::uint64_t examined_ = 0;
  std::optional<Key> witness_;
};

struct Task {
  std::vector<Truth> state;
  std::size_t pos;
};

void split(const Problem& p, const BoundTables& tables, std::vector<Truth> state, std::size_t pos,
           std::size_t depth, std::vector<Task>& out) {
  while (pos < p.n && state[tables.order[pos]] != Truth::Unknown) ++pos;
  if (depth == 0 || pos == p.n) {
    out.push_back({std::move(state), pos});
    return;
  }
  const std::size_t var = tables.order[pos];
  for (Truth value : {Truth::True, Truth::False}) {
    std::vector<Truth> child = state;
    child[var] = value;
    const std::array<std::size_t, 1> changed{var};
    if (!detail::propagate_in_place(*p.constraints, child, changed)) {
      split(p, tables, std::move(child), pos + 1, depth - 1, out);
    }
  }
}

FrontResult assemble(const Problem& p, const Archive& archive) {
  FrontResult result;
  for (const auto& pt : archive.points()) {
    FrontPoint fp{pt.score, {}};
    fp.scenarios.reserve(pt.keys.size());
    for (const auto& key : pt.keys) fp.scenarios.push_back(p.to_scenario(key));
    result.points.push_back(std::move(fp));
    result.truncated = result.truncated || pt.overflow;
  }
  return result;
}

FrontResult branch_and_bound_front(const Problem& p, const GenerationConfig& config,
                                   const std::function<void(std::span<const Truth>)>* on_prune) {
  const BoundTables tables(p);
  SharedFront front;
  SearchShared shared;
  shared.problem = &p;
  shared.tables = &tables;
  shared.front = &front;
  shared.node_limit = config.node_limit;
  shared.on_prune = on_prune;

  const std::size_t cap = tie_cap(config);
  const bool flag_overflow = config.tie_policy == TiePolicy::AllTies;

  std::vector<Truth> root(p.n, Truth::Unknown);
  if (detail::propagate_in_place(*p.constraints, root, {})) return {};

  const std::size_t workers = config.worker_count;
  std::vector<Archive> archives(workers, Archive(cap, flag_overflow));
  std::uint64_t examined = 0;

  if (workers == 1) {
    Search search(shared, Goal::Front, &archives[0]);
    search.visit(std::move(root), 0);
    examined = search.examined();
  } else {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < workers * 16 && depth < 20) ++depth;
    std::vector<Task> tasks;
    split(p, tables, std::move(root), 0, depth, tasks);

    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          Search search(shared, Goal::Front, &archives[w]);
          for (std::size_t i = next++; i < tasks.size(); i = next++) {
            search.visit(std::move(tasks[i].state), tasks[i].pos);
          }
          counts[w] = search.examined();
        } catch (...) {
          errors[w] = std::current_exception();
          shared.stop = true;
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::size_t w = 1; w < workers; ++w) archives[0].merge(std::move(archives[w]));
    examined = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }

  FrontResult result = assemble(p, archives[0]);
  result.total_valid_examined = examined;
  result.truncated = result.truncated || shared.hit_node_limit;
  return result;
}

}  // namespace

Score score(const Scenario& scenario, const Catalog& catalog) {
  Tally t;
  std::array<double, kProbabilityLevelCount> log10_values{};
  for (std::size_t l = 0; l < kProbabilityLevelCount; ++l) {
    log10_values[l] = catalog.mapping().log10_probability(static_cast<ProbabilityLevel>(l));
  }
  for (const auto& id : scenario.members()) {
    const Feature& f = catalog.at(id);
    ++t.counts[static_cast<std::size_t>(f.probability)];
    t.crit += catalog.mapping().rank(f.criticality);
  }
  return to_score(t, log10_values);
}

void for_each_valid(const Catalog& catalog, const ConstraintSet& constraints,
                    const GenerationConfig& config,
                    const std::function<void(const Scenario&)>& visit) {
  const Problem p = make_problem(catalog, constraints, config);
  require_brute_force_size(p, config);
  enumerate_keys(p, [&](const Key& key, const Tally&) { visit(p.to_scenario(key)); });
}

std::vector<Scenario> enumerate_valid(const Catalog& catalog, const ConstraintSet& constraints,
                                      const GenerationConfig& config) {
  std::vector<Scenario> out;
  for_each_valid(catalog, constraints, config, [&](const Scenario& s) { out.push_back(s); });
  return out;
}

FrontResult generate_front(const Catalog& catalog, const ConstraintSet& constraints,
                           const GenerationConfig& config) {
  const Problem p = make_problem(catalog, constraints, config);
  EngineMode mode = config.engine_mode;
  if (mode == EngineMode::Auto) {
    mode = p.n <= std::min(kAutoBruteForceMax, config.brute_force_limit) ? EngineMode::BruteForce
                                                                         : EngineMode::BranchAndBound;
  }
  if (mode == EngineMode::BruteForce) return brute_force_front(p, config);
  return branch_and_bound_front(p, config, nullptr);
}

std::optional<Scenario> check_satisfiable(const Catalog& catalog, const ConstraintSet& constraints,
                                          const GenerationConfig& config) {
  if (config.min_features > std::min(config.max_features.value_or(catalog.size()), catalog.size())) {
    return std::nullopt;
  }
  GenerationConfig single = config;
  single.worker_count = 1;
  const Problem p = make_problem(catalog, constraints, single);
  const BoundTables tables(p);
  SharedFront front;
  SearchShared shared;
  shared.problem = &p;
  shared.tables = &tables;
  shared.front = &front;

  std::vector<Truth> root(p.n, Truth::Unknown);
  if (detail::propagate_in_place(*p.constraints, root, {})) return std::nullopt;
  Search search(shared, Goal::Witness, nullptr);
  search.visit(std::move(root), 0);
  if (!search.witness()) return std::nullopt;
  return p.to_scenario(*search.witness());
}

namespace detail {

FrontResult generate_front_traced(const Catalog& catalog, const ConstraintSet& constraints,
                                  const GenerationConfig& config,
                                  const std::function<void(std::span<const Truth>)>& on_prune) {
  GenerationConfig single = config;
  single.worker_count = 1;
  const Problem p = make_problem(catalog, constraints, single);
  return branch_and_bound_front(p, single, &on_prune);
}

}  // namespace detail

}  // namespace scenforge
