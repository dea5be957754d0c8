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

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ips/model.hpp"

namespace ips {

/// Snapshot of the yard: geometry, per-bay segment labels and the placement
/// map. The placement map is the canonical representation; it can hold
/// invalid states so that validate_yard() has something to report on.
struct YardState {
  YardLayout layout;
  int max_tier = 1;
  // One label per bay; empty means the yard is not segmented.
  std::vector<SegmentId> bay_segments;
  std::map<std::string, Slot> placements;
  // Segment each container must live in (from its operational category).
  std::map<std::string, SegmentId> required_segments;

  YardState() = default;
  YardState(YardLayout l, int tiers) : layout(l), max_tier(tiers) {}

  bool segmented() const { return !bay_segments.empty(); }

  SegmentId segment_of_bay(int bay) const {
    if (!segmented() || bay < 0 || bay >= static_cast<int>(bay_segments.size()))
      return SegmentId::None;
    return bay_segments[static_cast<std::size_t>(bay)];
  }

  int stack_index(int bay, int row) const { return bay * layout.width_rows + row; }

  bool contains(const std::string& id) const { return placements.count(id) != 0; }

  const Slot& slot_of(const std::string& id) const {
    auto it = placements.find(id);
    if (it == placements.end()) throw ValidationError("unknown container '" + id + "'");
    return it->second;
  }

  /// Containers of every stack, bottom-up, indexed by stack_index().
  /// Assumes a gravity-consistent state.
  std::vector<std::vector<std::string>> stacks() const {
    std::vector<std::vector<std::pair<int, std::string>>> tiers(
        static_cast<std::size_t>(layout.stack_count()));
    for (const auto& [id, slot] : placements)
      tiers[static_cast<std::size_t>(stack_index(slot.bay, slot.row))].emplace_back(slot.tier, id);
    std::vector<std::vector<std::string>> out(tiers.size());
    for (std::size_t s = 0; s < tiers.size(); ++s) {
      std::sort(tiers[s].begin(), tiers[s].end());
      for (auto& [tier, id] : tiers[s]) out[s].push_back(std::move(id));
    }
    return out;
  }

  int stack_height(int bay, int row) const {
    int h = 0;
    for (const auto& [id, slot] : placements)
      if (slot.bay == bay && slot.row == row) ++h;
    return h;
  }

  /// Puts a container on top of (bay,row) and returns the slot it took.
  Slot push(const std::string& id, int bay, int row) {
    Slot slot{bay, row, stack_height(bay, row), segment_of_bay(bay)};
    placements[id] = slot;
    return slot;
  }

  bool operator==(const YardState&) const = default;
};

/// Number of occupied tiers strictly above the container in its stack.
inline int containers_above(const YardState& yard, const std::string& id) {
  const Slot& target = yard.slot_of(id);
  int above = 0;
  for (const auto& [other, slot] : yard.placements)
    if (slot.bay == target.bay && slot.row == target.row && slot.tier > target.tier) ++above;
  return above;
}

enum class ViolationKind { Gravity, DuplicateSlot, TierBound, OutOfBounds, SegmentMismatch };

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Gravity: return "gravity";
    case ViolationKind::DuplicateSlot: return "duplicate_slot";
    case ViolationKind::TierBound: return "tier_bound";
    case ViolationKind::OutOfBounds: return "out_of_bounds";
    case ViolationKind::SegmentMismatch: return "segment_mismatch";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string container_id;
  Slot slot;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Reports every structural problem in the yard. An empty result means ok.
inline std::vector<Violation> validate_yard(const YardState& yard) {
  std::vector<Violation> out;
  std::map<std::tuple<int, int, int>, std::string> occupied;

  for (const auto& [id, slot] : yard.placements) {
    if (slot.bay < 0 || slot.bay >= yard.layout.length_bays || slot.row < 0 ||
        slot.row >= yard.layout.width_rows || slot.tier < 0) {
      out.push_back({ViolationKind::OutOfBounds, id, slot, "slot outside the yard grid"});
      continue;
    }
    if (slot.tier >= yard.max_tier)
      out.push_back({ViolationKind::TierBound, id, slot,
                     "tier " + std::to_string(slot.tier) + " >= max tier " +
                         std::to_string(yard.max_tier)});

    auto [it, inserted] = occupied.emplace(std::tuple{slot.bay, slot.row, slot.tier}, id);
    if (!inserted)
      out.push_back({ViolationKind::DuplicateSlot, id, slot, "slot already held by " + it->second});

    SegmentId expected = yard.segment_of_bay(slot.bay);
    if (slot.segment != expected)
      out.push_back({ViolationKind::SegmentMismatch, id, slot,
                     "slot labelled " + std::string(to_string(slot.segment)) + " but bay is " +
                         std::string(to_string(expected))});
    if (auto req = yard.required_segments.find(id);
        req != yard.required_segments.end() && req->second != SegmentId::None &&
        req->second != expected)
      out.push_back({ViolationKind::SegmentMismatch, id, slot,
                     "container belongs in " + std::string(to_string(req->second))});
  }

  for (const auto& [id, slot] : yard.placements) {
    if (slot.tier <= 0 || slot.bay < 0 || slot.bay >= yard.layout.length_bays || slot.row < 0 ||
        slot.row >= yard.layout.width_rows)
      continue;
    if (!occupied.count({slot.bay, slot.row, slot.tier - 1}))
      out.push_back({ViolationKind::Gravity, id, slot, "no container at the tier below"});
  }
  return out;
}

}  // namespace ips
