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

// Exhaustive reference for small placement instances. Shares no code with
// the solver: it enumerates every gravity-valid stacking and scores each one
// with its own retrieval simulation.

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ips/solver.hpp"

namespace ips::testing {

struct SmallInstance {
  int bays = 1;
  int rows = 1;
  int tiers = 1;
  std::vector<SegmentId> bay_segment;      // empty = unsegmented
  std::vector<std::vector<int>> existing;  // per stack, bottom-up container numbers
  int incoming = 0;                        // numbered after the existing ones
  bool relocation = false;
  std::vector<SegmentId> need;             // per container
  std::vector<int> due;                    // per container; INT_MAX = not retrieved
  ObjectiveWeights weights;

  int stacks() const { return bays * rows; }
  int total() const { return static_cast<int>(need.size()); }
  SegmentId stack_segment(int s) const {
    return bay_segment.empty() ? SegmentId::None : bay_segment[static_cast<std::size_t>(s / rows)];
  }
  static std::string name(int c) { return "k" + std::to_string(100 + c); }
};

/// Builds the solver-facing model for an instance.
inline PlacementModel to_model(const SmallInstance& in) {
  YardState yard(YardLayout{in.bays, in.rows, {0, 0}, {in.bays, 0}, in.total()}, in.tiers);
  yard.bay_segments = in.bay_segment;
  for (int s = 0; s < in.stacks(); ++s)
    for (std::size_t t = 0; t < in.existing[static_cast<std::size_t>(s)].size(); ++t) {
      const int c = in.existing[static_cast<std::size_t>(s)][t];
      yard.placements[SmallInstance::name(c)] =
          Slot{s / in.rows, s % in.rows, static_cast<int>(t), in.stack_segment(s)};
      if (in.need[static_cast<std::size_t>(c)] != SegmentId::None)
        yard.required_segments[SmallInstance::name(c)] = in.need[static_cast<std::size_t>(c)];
    }
  int existing = 0;
  for (const auto& st : in.existing) existing += static_cast<int>(st.size());

  std::vector<std::pair<int, int>> order;
  for (int c = 0; c < in.total(); ++c)
    if (in.due[static_cast<std::size_t>(c)] != INT_MAX) order.emplace_back(in.due[static_cast<std::size_t>(c)], c);
  std::sort(order.begin(), order.end());
  std::vector<std::string> sequence;
  for (auto [d, c] : order) sequence.push_back(SmallInstance::name(c));

  PlacementModel model;
  model.yard = yard;
  for (int c = existing; c < in.total(); ++c)
    model.incoming.push_back({SmallInstance::name(c), in.need[static_cast<std::size_t>(c)], false});
  model.pickup_order = PickupOrder::from_sequence(sequence);
  model.weights = in.weights;
  model.allow_relocation = in.relocation;
  return model;
}

class PlacementOracle {
 public:
  explicit PlacementOracle(const SmallInstance& in) : in_(in) {
    columns_.assign(static_cast<std::size_t>(in.stacks()), {});
    floor_.assign(static_cast<std::size_t>(in.stacks()), 0);
    origin_.assign(static_cast<std::size_t>(in.total()), {-1, -1});
    for (int s = 0; s < in.stacks(); ++s) {
      const auto& st = in.existing[static_cast<std::size_t>(s)];
      for (std::size_t t = 0; t < st.size(); ++t) {
        if (in.relocation) {
          origin_[static_cast<std::size_t>(st[t])] = {s, static_cast<int>(t)};
          free_.push_back(st[t]);
        } else {
          columns_[static_cast<std::size_t>(s)].push_back(st[t]);
        }
      }
      if (!in.relocation) floor_[static_cast<std::size_t>(s)] = static_cast<int>(st.size());
    }
    int existing = 0;
    for (const auto& st : in.existing) existing += static_cast<int>(st.size());
    for (int c = existing; c < in.total(); ++c) free_.push_back(c);
  }

  /// Minimum objective over every feasible stacking (infinity if none).
  double minimum() {
    best_ = std::numeric_limits<double>::infinity();
    configurations_ = 0;
    place(0);
    return best_;
  }

  std::uint64_t configurations() const { return configurations_; }

  /// Objective of one complete stacking (stacks bottom-up).
  double score(const std::vector<std::vector<int>>& cols) const {
    int relocated = 0;
    for (int s = 0; s < static_cast<int>(cols.size()); ++s)
      for (int t = 0; t < static_cast<int>(cols[static_cast<std::size_t>(s)].size()); ++t) {
        auto [os, ot] = origin_[static_cast<std::size_t>(cols[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)])];
        if (os >= 0 && (os != s || ot != t)) ++relocated;
      }
    int inversions = 0;
    for (const auto& col : cols)
      for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = i + 1; j < col.size(); ++j)
          if (due(col[j]) > due(col[i])) ++inversions;
    return in_.weights.rehandle * retrieve(cols) + in_.weights.relocation * relocated +
           in_.weights.zorder * inversions;
  }

  /// Crane moves spent digging out every due container in due order.
  int retrieve(std::vector<std::vector<int>> cols) const {
    std::vector<int> queue;
    for (int c = 0; c < in_.total(); ++c)
      if (due(c) != INT_MAX) queue.push_back(c);
    std::sort(queue.begin(), queue.end(), [&](int a, int b) { return due(a) < due(b); });
    int moves = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int target = queue[k];
      int s = -1;
      for (int i = 0; i < static_cast<int>(cols.size()) && s < 0; ++i)
        if (std::find(cols[static_cast<std::size_t>(i)].begin(), cols[static_cast<std::size_t>(i)].end(), target) !=
            cols[static_cast<std::size_t>(i)].end())
          s = i;
      if (s < 0) continue;  // set aside earlier
      auto& col = cols[static_cast<std::size_t>(s)];
      while (col.back() != target) {
        const int lifted = col.back();
        col.pop_back();
        ++moves;
        // Next retrieval time of a stack: the earliest due among what it holds.
        auto urgency = [&](int i) {
          int u = INT_MAX;
          for (int c : cols[static_cast<std::size_t>(i)]) u = std::min(u, due(c));
          return u;
        };
        int pick = -1, pick_u = -1;
        for (int pass = 0; pass < 2 && pick < 0; ++pass)
          for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
            if (i == s || static_cast<int>(cols[static_cast<std::size_t>(i)].size()) >= in_.tiers) continue;
            const bool same = in_.stack_segment(i) == in_.stack_segment(s);
            if ((pass == 0) != same) continue;
            const int u = urgency(i);
            if (u > pick_u) pick = i, pick_u = u;
          }
        if (pick >= 0) cols[static_cast<std::size_t>(pick)].push_back(lifted);
      }
      col.pop_back();
    }
    return moves;
  }

 private:
  int due(int c) const { return in_.due[static_cast<std::size_t>(c)]; }

  void place(std::size_t k) {
    if (k == free_.size()) {
      ++configurations_;
      best_ = std::min(best_, score(columns_));
      return;
    }
    const int c = free_[k];
    for (int s = 0; s < in_.stacks(); ++s) {
      auto& col = columns_[static_cast<std::size_t>(s)];
      if (static_cast<int>(col.size()) >= in_.tiers) continue;
      const SegmentId want = in_.need[static_cast<std::size_t>(c)];
      if (!in_.bay_segment.empty() && want != SegmentId::None && in_.stack_segment(s) != want) continue;
      for (int pos = floor_[static_cast<std::size_t>(s)]; pos <= static_cast<int>(col.size()); ++pos) {
        col.insert(col.begin() + pos, c);
        place(k + 1);
        col.erase(col.begin() + pos);
      }
    }
  }

  const SmallInstance& in_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> floor_;
  std::vector<std::pair<int, int>> origin_;
  std::vector<int> free_;
  double best_ = 0.0;
  std::uint64_t configurations_ = 0;
};

/// Random feasible instance with at most `max_containers` containers and
/// at most `max_slots` slots.
inline SmallInstance random_instance(std::mt19937_64& rng, int max_containers = 8, int max_slots = 12) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  SmallInstance in;
  for (;;) {
    in.bays = uniform(1, 4);
    in.rows = uniform(1, 3);
    in.tiers = uniform(1, 4);
    if (in.stacks() * in.tiers <= max_slots && in.stacks() * in.tiers >= 2) break;
  }
  const int slots = in.stacks() * in.tiers;
  const int n = uniform(1, std::min(max_containers, slots));
  const int existing = uniform(0, std::min(n, 3)) * (uniform(0, 2) > 0 ? 1 : 0);
  in.relocation = uniform(0, 1) == 1;
  if (in.bays >= 2 && uniform(0, 2) > 0) {
    for (int b = 0; b < in.bays; ++b) in.bay_segment.push_back(static_cast<SegmentId>(uniform(1, 3)));
  }
  in.existing.assign(static_cast<std::size_t>(in.stacks()), {});
  std::vector<int> room(static_cast<std::size_t>(in.stacks()), in.tiers);
  in.need.assign(static_cast<std::size_t>(n), SegmentId::None);
  for (int c = 0; c < n; ++c) {
    std::vector<int> open;
    for (int s = 0; s < in.stacks(); ++s)
      if (room[static_cast<std::size_t>(s)] > 0) open.push_back(s);
    const int s = open[static_cast<std::size_t>(uniform(0, static_cast<int>(open.size()) - 1))];
    --room[static_cast<std::size_t>(s)];
    // A segment is only required when the yard is segmented; the chosen
    // stack guarantees there is room for it.
    if (!in.bay_segment.empty() && uniform(0, 4) > 0) in.need[static_cast<std::size_t>(c)] = in.stack_segment(s);
    if (c < existing) {
      in.need[static_cast<std::size_t>(c)] = in.bay_segment.empty() ? SegmentId::None : in.stack_segment(s);
      in.existing[static_cast<std::size_t>(s)].push_back(c);
    }
  }
  // Dues: a random permutation, some containers not retrieved, some ties.
  in.due.assign(static_cast<std::size_t>(n), INT_MAX);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) perm[static_cast<std::size_t>(c)] = c;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i)
    if (uniform(0, 4) > 0) in.due[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  in.incoming = n - existing;
  const double weights[][3] = {{1, 2, 1}, {1, 2, 1}, {1, 0.5, 0}, {2, 1, 0.5}, {0, 1, 1}};
  const auto& w = weights[uniform(0, 4)];
  in.weights = {w[0], w[1], w[2]};
  return in;
}

}  // namespace ips::testing
