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
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "ips/model.hpp"
#include "ips/yard.hpp"

namespace ips {

inline SegmentId segment_for(Category c) {
  switch (c) {
    case Category::Cat1: return SegmentId::S1;
    case Category::Cat2: return SegmentId::S2;
    case Category::Cat3: return SegmentId::S3;
  }
  return SegmentId::None;
}

struct Segment {
  SegmentId id = SegmentId::None;
  int first_bay = 0;  // inclusive
  int last_bay = 0;   // inclusive
  int capacity = 0;

  int bays() const { return last_bay - first_bay + 1; }
  bool operator==(const Segment&) const = default;
};

/// Three contiguous bay ranges, indexed S1, S2, S3.
struct SegmentPlan {
  std::array<Segment, 3> segments{};

  const Segment& operator[](SegmentId id) const {
    return segments[static_cast<std::size_t>(id) - 1];
  }
  SegmentId segment_for(Category c) const { return ips::segment_for(c); }

  /// Label of every bay, suitable for YardState::bay_segments.
  std::vector<SegmentId> bay_labels(int length_bays) const {
    std::vector<SegmentId> labels(static_cast<std::size_t>(length_bays), SegmentId::None);
    for (const auto& seg : segments)
      for (int b = seg.first_bay; b <= seg.last_bay; ++b) labels[static_cast<std::size_t>(b)] = seg.id;
    return labels;
  }
  bool operator==(const SegmentPlan&) const = default;
};

using CategoryCensus = std::array<int, 3>;

class SizingError : public InfeasibleError {
 public:
  SizingError(std::string what, CategoryCensus deficit)
      : InfeasibleError(std::move(what)), deficit_(deficit) {}
  /// Containers that do not fit, per segment (S1, S2, S3).
  const CategoryCensus& deficit() const { return deficit_; }

 private:
  CategoryCensus deficit_;
};

/// Splits the bays into S1/S2/S3 in proportion to the category census by
/// largest remainder, at least one bay each. S1 sits next to the exit gate
/// and S3 next to the entry gate.
inline SegmentPlan partition_segments(const YardLayout& layout, int max_tier,
                                      const CategoryCensus& census) {
  const int bays = layout.length_bays;
  const int per_bay = layout.width_rows * max_tier;
  const int total = std::accumulate(census.begin(), census.end(), 0);
  if (bays < 3) throw SizingError("segmentation needs at least three bays", {0, 0, 0});
  if (static_cast<long>(bays) * per_bay < total) {
    throw SizingError("yard capacity " + std::to_string(bays * per_bay) +
                          " is below the census " + std::to_string(total),
                      {std::max(0, total - bays * per_bay), 0, 0});
  }

  // Largest-remainder apportionment; an empty census falls back to equal weights.
  std::array<long, 3> weight{};
  for (std::size_t k = 0; k < 3; ++k) weight[k] = total == 0 ? 1 : census[k];
  const long weight_sum = total == 0 ? 3 : total;
  std::array<int, 3> share{};
  std::array<long, 3> remainder{};
  int assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    share[k] = static_cast<int>(weight[k] * bays / weight_sum);
    remainder[k] = weight[k] * bays % weight_sum;
    assigned += share[k];
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < bays; i = (i + 1) % 3, ++assigned) ++share[order[i]];

  for (std::size_t k = 0; k < 3; ++k) {
    if (share[k] > 0) continue;
    auto donor = static_cast<std::size_t>(std::max_element(share.begin(), share.end()) - share.begin());
    --share[donor];
    ++share[k];
  }

  CategoryCensus deficit{};
  bool short_of_space = false;
  for (std::size_t k = 0; k < 3; ++k) {
    deficit[k] = std::max(0, census[k] - share[k] * per_bay);
    short_of_space = short_of_space || deficit[k] > 0;
  }
  if (short_of_space)
    throw SizingError("segment capacity shortfall (S1,S2,S3 deficit = " +
                          std::to_string(deficit[0]) + "," + std::to_string(deficit[1]) + "," +
                          std::to_string(deficit[2]) + ")",
                      deficit);

  SegmentPlan plan;
  const bool exit_at_high_bays = layout.exit_gate.bay >= layout.entry_gate.bay;
  // Walk from the entry side: S3, S2, S1.
  int cursor = 0;
  for (std::size_t step = 0; step < 3; ++step) {
    std::size_t k = 2 - step;
    int first = cursor;
    int last = cursor + share[k] - 1;
    cursor += share[k];
    if (!exit_at_high_bays) {
      first = bays - 1 - last;
      last = first + share[k] - 1;
    }
    plan.segments[k] = {static_cast<SegmentId>(k + 1), first, last, share[k] * per_bay};
  }
  return plan;
}

/// Labels the yard's bays with the plan's segments.
inline void apply_segments(YardState& yard, const SegmentPlan& plan) {
  yard.bay_segments = plan.bay_labels(yard.layout.length_bays);
}

}  // namespace ips
