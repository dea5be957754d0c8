// Copyright 2026 The IPS Authors
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

// Stack quality measures: expected pickup order, z-order violations and a
// retrieval simulator that counts rehandles (containers moved off a target).

#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ips/model.hpp"
#include "ips/yard.hpp"

namespace ips {

struct PickupInfo {
  std::string id;
  std::optional<int> appointment_block;
  StackClass stack_class = StackClass::C1;
  int remaining_free_days = 0;
};

/// Total order of expected pickups, earliest first. Booked containers come
/// first by block; the rest follow by stacking class (C3 earliest). Ties go
/// to fewer remaining free days, then id.
class PickupOrder {
 public:
  static constexpr int kNever = INT_MAX;

  PickupOrder() = default;

  static PickupOrder from_sequence(std::vector<std::string> ids) {
    PickupOrder order;
    order.sequence_ = std::move(ids);
    for (std::size_t i = 0; i < order.sequence_.size(); ++i)
      order.rank_.emplace(order.sequence_[i], static_cast<int>(i));
    if (order.rank_.size() != order.sequence_.size())
      throw ValidationError("pickup order lists a container twice");
    return order;
  }

  static PickupOrder from_infos(std::span<const PickupInfo> infos) {
    std::vector<const PickupInfo*> sorted;
    for (const auto& info : infos) sorted.push_back(&info);
    auto key = [](const PickupInfo* p) {
      const bool booked = p->appointment_block.has_value();
      return std::tuple{booked ? 0 : 1, booked ? *p->appointment_block : pickup_rank(p->stack_class),
                        p->remaining_free_days, std::string_view(p->id)};
    };
    std::sort(sorted.begin(), sorted.end(),
              [&](const PickupInfo* a, const PickupInfo* b) { return key(a) < key(b); });
    std::vector<std::string> ids;
    for (const auto* p : sorted) ids.push_back(p->id);
    return from_sequence(std::move(ids));
  }

  /// Position in the order; kNever for containers that are not expected.
  int rank(const std::string& id) const {
    auto it = rank_.find(id);
    return it == rank_.end() ? kNever : it->second;
  }

  const std::vector<std::string>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

  bool operator==(const PickupOrder& other) const { return sequence_ == other.sequence_; }

 private:
  std::vector<std::string> sequence_;
  std::map<std::string, int> rank_;
};

namespace detail {

/// Yard geometry reduced to what the simulator needs. Stacks are indexed
/// bay-major, so lower index means lower bay, then lower row.
struct Grid {
  int max_tier = 1;
  int rows = 1;
  std::vector<SegmentId> stack_segment;

  static Grid of(const YardState& yard) {
    Grid g;
    g.max_tier = yard.max_tier;
    g.rows = yard.layout.width_rows;
    g.stack_segment.resize(static_cast<std::size_t>(yard.layout.stack_count()));
    for (int s = 0; s < yard.layout.stack_count(); ++s)
      g.stack_segment[static_cast<std::size_t>(s)] = yard.segment_of_bay(s / g.rows);
    return g;
  }
  int size() const { return static_cast<int>(stack_segment.size()); }
};

using Stacks = std::vector<std::vector<int>>;

/// Where a blocker lifted off `from` is put down: the same-segment stack
/// with room whose next retrieval is furthest away (an empty stack counts
/// as never), lowest index on ties. Without same-segment room the same rule
/// runs over every stack; -1 means the blocker is set aside off the grid.
/// `due[c]` is the sequence position of container c (INT_MAX if never).
inline int drop_target(const Grid& grid, const Stacks& stacks, int from, std::span<const int> due) {
  const SegmentId seg = grid.stack_segment[static_cast<std::size_t>(from)];
  auto next_due = [&](int s) {
    int soonest = INT_MAX;
    for (int c : stacks[static_cast<std::size_t>(s)]) soonest = std::min(soonest, due[static_cast<std::size_t>(c)]);
    return soonest;
  };
  int best = -1, best_due = -1, fallback = -1, fallback_due = -1;
  for (int s = 0; s < grid.size(); ++s) {
    if (s == from || static_cast<int>(stacks[static_cast<std::size_t>(s)].size()) >= grid.max_tier)
      continue;
    const int d = next_due(s);
    if (grid.stack_segment[static_cast<std::size_t>(s)] == seg) {
      if (d > best_due) best = s, best_due = d;
    } else if (d > fallback_due) {
      fallback = s, fallback_due = d;
    }
  }
  return best >= 0 ? best : fallback;
}

/// Retrieves `sequence` in order from `stacks` (consumed). Returns the total
/// number of rehandles; per-target counts go to `per_target` when given.
inline int simulate(const Grid& grid, Stacks stacks, std::span<const int> sequence,
                    std::size_t n_containers, std::vector<int>* per_target = nullptr) {
  std::vector<int> where(n_containers, -1);
  for (std::size_t s = 0; s < stacks.size(); ++s)
    for (int c : stacks[s]) where[static_cast<std::size_t>(c)] = static_cast<int>(s);
  std::vector<int> due(n_containers, INT_MAX);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    due[static_cast<std::size_t>(sequence[i])] = std::min(due[static_cast<std::size_t>(sequence[i])], static_cast<int>(i));

  int total = 0;
  for (int target : sequence) {
    int s = where[static_cast<std::size_t>(target)];
    int moved = 0;
    if (s >= 0) {
      auto& stack = stacks[static_cast<std::size_t>(s)];
      while (stack.back() != target) {
        int blocker = stack.back();
        stack.pop_back();
        ++moved;
        int dest = drop_target(grid, stacks, s, due);
        where[static_cast<std::size_t>(blocker)] = dest;
        if (dest >= 0) stacks[static_cast<std::size_t>(dest)].push_back(blocker);
      }
      stack.pop_back();
      where[static_cast<std::size_t>(target)] = -1;
    }
    total += moved;
    if (per_target) per_target->push_back(moved);
  }
  return total;
}

/// Pairs (upper, lower) in one stack where the upper container is expected
/// strictly later.
inline int zorder_pairs(const Stacks& stacks, std::span<const int> rank) {
  int count = 0;
  for (const auto& stack : stacks)
    for (std::size_t lo = 0; lo < stack.size(); ++lo)
      for (std::size_t up = lo + 1; up < stack.size(); ++up)
        if (rank[static_cast<std::size_t>(stack[up])] > rank[static_cast<std::size_t>(stack[lo])])
          ++count;
  return count;
}

/// Integer view of a YardState: containers numbered in id order.
struct IndexedYard {
  Grid grid;
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  Stacks stacks;

  explicit IndexedYard(const YardState& yard) : grid(Grid::of(yard)) {
    for (const auto& [id, slot] : yard.placements) {
      index.emplace(id, static_cast<int>(ids.size()));
      ids.push_back(id);
    }
    stacks.resize(static_cast<std::size_t>(grid.size()));
    auto named = yard.stacks();
    for (std::size_t s = 0; s < named.size(); ++s)
      for (const auto& id : named[s]) stacks[s].push_back(index.at(id));
  }

  std::vector<int> ranks(const PickupOrder& order) const {
    std::vector<int> r;
    r.reserve(ids.size());
    for (const auto& id : ids) r.push_back(order.rank(id));
    return r;
  }

  /// Containers of `order` that are in the yard, earliest first.
  std::vector<int> retrieval_sequence(const PickupOrder& order) const {
    std::vector<int> seq;
    for (const auto& id : order.sequence())
      if (auto it = index.find(id); it != index.end()) seq.push_back(it->second);
    return seq;
  }
};

}  // namespace detail

inline int zorder_violations(const YardState& yard, const PickupOrder& order) {
  detail::IndexedYard iy(yard);
  return detail::zorder_pairs(iy.stacks, iy.ranks(order));
}

/// Rehandles needed to retrieve every expected container in pickup order.
/// Blockers are re-stacked as described at drop_target().
inline int expected_rehandles(const YardState& yard, const PickupOrder& order) {
  detail::IndexedYard iy(yard);
  auto seq = iy.retrieval_sequence(order);
  return detail::simulate(iy.grid, iy.stacks, seq, iy.ids.size());
}

struct RetrievalTrace {
  std::vector<std::string> sequence;
  std::vector<int> rehandles;  // one entry per retrieved container
  int total = 0;
};

/// Retrieves the given containers in the given order. Ids not in the yard
/// cost nothing.
inline RetrievalTrace simulate_retrievals(const YardState& yard,
                                          std::span<const std::string> sequence) {
  detail::IndexedYard iy(yard);
  std::vector<int> seq;
  RetrievalTrace trace;
  for (const auto& id : sequence) {
    if (auto it = iy.index.find(id); it != iy.index.end()) {
      seq.push_back(it->second);
      trace.sequence.push_back(id);
    }
  }
  trace.total = detail::simulate(iy.grid, iy.stacks, seq, iy.ids.size(), &trace.rehandles);
  return trace;
}

}  // namespace ips
