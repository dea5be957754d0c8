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

// Gate-time model and the recursive appointment rebalancer.
//
// A block is congested when the time to clear its trucks through the gate
// (DT) exceeds the internal loading + inspection time (IO). The rebalancer
// moves the latest-booked visits out of congested blocks, then offers the
// remaining slack to containers without appointments, and repeats until
// neither step changes the schedule.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ips/model.hpp"

namespace ips {

inline double internal_op_time(const TerminalParams& p) { return p.load_minutes + p.inspect_minutes; }

/// Gate clearance time for `trucks` trucks. Pass the live count M_t for a
/// block, or the planning bound M_0 for capacity analysis.
inline double departure_time(int trucks, const TerminalParams& p) {
  return static_cast<double>(trucks) / p.gate_servers * p.clear_minutes;
}

inline double processing_time(int trucks, const TerminalParams& p) {
  return departure_time(trucks, p) + internal_op_time(p);
}

/// Largest truck count per block with DT <= IO.
inline int serviceable_maximum(const TerminalParams& p) {
  // The small nudge keeps exact products such as 30*2/1 from flooring to 59.
  return static_cast<int>(std::floor(internal_op_time(p) * p.gate_servers / p.clear_minutes + 1e-9));
}

inline void validate(const TerminalParams& p) {
  if (p.gate_servers < 1) throw ValidationError("gate_servers must be >= 1");
  if (!(p.clear_minutes > 0)) throw ValidationError("clear_minutes must be > 0");
  if (!(p.load_minutes > 0)) throw ValidationError("load_minutes must be > 0");
  if (p.inspect_minutes < 0) throw ValidationError("inspect_minutes must be >= 0");
  if (p.rehandle_minutes < 0) throw ValidationError("rehandle_minutes must be >= 0");
  if (p.max_waiting_trucks < 1) throw ValidationError("max_waiting_trucks must be >= 1");
  if (p.blocks_per_day < 1) throw ValidationError("blocks_per_day must be >= 1");
  if (p.block_minutes < 1) throw ValidationError("block_minutes must be >= 1");
  if (p.max_tier < 1) throw ValidationError("max_tier must be >= 1");
  if (serviceable_maximum(p) < 1)
    throw ValidationError("terminal parameters allow no truck per block (DT > IO for one truck)");
}

struct Schedule {
  Date day{};
  TerminalParams params;
  std::vector<TimeBlock> blocks;
  std::uint64_t next_booking = 0;

  static Schedule empty(Date day, const TerminalParams& params) {
    Schedule s;
    s.day = day;
    s.params = params;
    s.blocks.resize(static_cast<std::size_t>(params.blocks_per_day));
    for (int b = 0; b < params.blocks_per_day; ++b) s.blocks[static_cast<std::size_t>(b)].index = b;
    return s;
  }

  int block_count() const { return static_cast<int>(blocks.size()); }
  int threshold() const { return serviceable_maximum(params); }

  std::vector<int> counts() const {
    std::vector<int> out;
    for (const auto& b : blocks) out.push_back(b.truck_count());
    return out;
  }

  int total_visits() const {
    int n = 0;
    for (const auto& b : blocks) n += b.truck_count();
    return n;
  }

  int count_origin(VisitOrigin origin) const {
    int n = 0;
    for (const auto& b : blocks)
      for (const auto& v : b.visits) n += v.origin == origin;
    return n;
  }

  /// Block holding the container's visit, or -1.
  int find(const std::string& container_id) const {
    for (const auto& b : blocks)
      for (const auto& v : b.visits)
        if (v.container_id == container_id) return b.index;
    return -1;
  }

  /// Books a new visit at the end of the booking sequence.
  void book(int block, TruckVisit visit) {
    if (block < 0 || block >= block_count())
      throw ValidationError("block " + std::to_string(block) + " is outside the operational day");
    if (find(visit.container_id) >= 0)
      throw ValidationError("container '" + visit.container_id + "' already has a visit");
    visit.booked_at = next_booking++;
    blocks[static_cast<std::size_t>(block)].visits.push_back(std::move(visit));
  }

  /// Removes and returns the container's visit.
  std::optional<TruckVisit> cancel(const std::string& container_id) {
    for (auto& b : blocks)
      for (auto it = b.visits.begin(); it != b.visits.end(); ++it)
        if (it->container_id == container_id) {
          TruckVisit v = std::move(*it);
          b.visits.erase(it);
          return v;
        }
    return std::nullopt;
  }

  bool operator==(const Schedule&) const = default;
};

inline void validate(const Schedule& s) {
  validate(s.params);
  if (s.block_count() != s.params.blocks_per_day)
    throw ValidationError("schedule must have one block per operational hour");
  std::set<std::string> seen;
  for (int b = 0; b < s.block_count(); ++b) {
    if (s.blocks[static_cast<std::size_t>(b)].index != b)
      throw ValidationError("block indices must be contiguous from 0");
    for (const auto& v : s.blocks[static_cast<std::size_t>(b)].visits)
      if (!seen.insert(v.container_id).second)
        throw ValidationError("container '" + v.container_id + "' appears in two blocks");
  }
}

struct Congestion {
  int block = 0;
  int excess = 0;
  bool operator==(const Congestion&) const = default;
};

/// Blocks where DT(M_t) > IO, with the trucks above the serviceable maximum.
inline std::vector<Congestion> detect_congestion(const Schedule& s) {
  std::vector<Congestion> out;
  const double io = internal_op_time(s.params);
  const int limit = s.threshold();
  for (const auto& b : s.blocks)
    if (departure_time(b.truck_count(), s.params) > io)
      out.push_back({b.index, b.truck_count() - limit});
  return out;
}

enum class MoveReason { Congestion, Unresolvable };

inline std::string_view to_string(MoveReason r) {
  return r == MoveReason::Congestion ? "congestion" : "unresolvable";
}

struct VisitMove {
  std::string container_id;
  int from_block = 0;
  int to_block = 0;
  MoveReason reason = MoveReason::Congestion;
  bool operator==(const VisitMove&) const = default;
};

struct CreatedAppointment {
  std::string container_id;
  int block = 0;
  bool operator==(const CreatedAppointment&) const = default;
};

struct RebalanceReport {
  std::vector<VisitMove> moves;  // unresolvable entries stay in their block
  std::vector<CreatedAppointment> created;
  int iterations = 0;            // passes that changed the schedule
  bool converged = true;         // no congested block remains

  int moved_count() const {
    return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const VisitMove& m) {
      return m.reason == MoveReason::Congestion;
    }));
  }
  bool changed() const { return moved_count() > 0 || !created.empty(); }

  void absorb(const RebalanceReport& other) {
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
    created.insert(created.end(), other.created.begin(), other.created.end());
    iterations += other.iterations;
    converged = other.converged;
  }
  bool operator==(const RebalanceReport&) const = default;
};

struct RebalanceResult {
  Schedule schedule;
  RebalanceReport report;
};

namespace detail {

inline int last_legal_block(const TruckVisit& v, int blocks) {
  return v.deadline_block ? std::min(*v.deadline_block, blocks - 1) : blocks - 1;
}

/// Earliest later block with slack inside the deadline, else the earliest
/// earlier block with slack; -1 when neither exists.
inline int reinsertion_block(const Schedule& s, int from, const TruckVisit& v) {
  const int limit = s.threshold();
  const int last = last_legal_block(v, s.block_count());
  for (int b = from + 1; b <= last; ++b)
    if (s.blocks[static_cast<std::size_t>(b)].truck_count() < limit) return b;
  for (int b = 0; b < from && b <= last; ++b)
    if (s.blocks[static_cast<std::size_t>(b)].truck_count() < limit) return b;
  return -1;
}

/// One chronological pass; returns the number of visits moved.
inline int eviction_pass(Schedule& s, RebalanceReport& report, bool record_unresolved) {
  const int limit = s.threshold();
  const double io = internal_op_time(s.params);
  int moved = 0;
  for (int b = 0; b < s.block_count(); ++b) {
    auto& block = s.blocks[static_cast<std::size_t>(b)];
    if (departure_time(block.truck_count(), s.params) <= io) continue;

    // Latest booking first.
    std::vector<TruckVisit> candidates = block.visits;
    std::sort(candidates.begin(), candidates.end(),
              [](const TruckVisit& x, const TruckVisit& y) { return x.booked_at > y.booked_at; });
    for (const auto& v : candidates) {
      if (block.truck_count() <= limit) break;
      const int to = reinsertion_block(s, b, v);
      if (to < 0) continue;
      auto it = std::find_if(block.visits.begin(), block.visits.end(), [&](const TruckVisit& x) {
        return x.container_id == v.container_id;
      });
      s.blocks[static_cast<std::size_t>(to)].visits.push_back(*it);
      block.visits.erase(it);
      report.moves.push_back({v.container_id, b, to, MoveReason::Congestion});
      ++moved;
    }
    if (record_unresolved && block.truck_count() > limit) {
      std::sort(candidates.begin(), candidates.end(),
                [](const TruckVisit& x, const TruckVisit& y) { return x.booked_at > y.booked_at; });
      int left = block.truck_count() - limit;
      for (const auto& v : candidates) {
        if (left == 0) break;
        if (std::none_of(block.visits.begin(), block.visits.end(),
                         [&](const TruckVisit& x) { return x.container_id == v.container_id; }))
          continue;
        report.moves.push_back({v.container_id, b, b, MoveReason::Unresolvable});
        --left;
      }
    }
  }
  return moved;
}

}  // namespace detail

/// Moves visits out of congested blocks until no legal move remains.
inline RebalanceResult rebalance(Schedule s) {
  validate(s);
  RebalanceReport report;
  // Each pass either moves a visit into spare capacity or stops.
  const int max_passes = s.total_visits() + 1;
  for (int pass = 0; pass < max_passes; ++pass) {
    if (detail::eviction_pass(s, report, false) == 0) break;
    ++report.iterations;
  }
  detail::eviction_pass(s, report, true);
  report.converged = detect_congestion(s).empty();
  return {std::move(s), std::move(report)};
}

/// A container without an appointment that may be offered spare capacity.
struct SlackCandidate {
  std::string container_id;
  std::string carrier_id;
  Category category = Category::Cat2;
  StackClass stack_class = StackClass::C1;
  int remaining_free_days = 0;
  std::optional<int> deadline_block;
};

/// Demurrage first, then higher stacking class, then fewer free days, then id.
inline std::vector<SlackCandidate> slack_priority(std::span<const SlackCandidate> candidates) {
  std::vector<SlackCandidate> out;
  for (const auto& c : candidates)
    if (c.category != Category::Cat1) out.push_back(c);
  auto key = [](const SlackCandidate& c) {
    return std::tuple{c.category == Category::Cat3 ? 0 : 1, pickup_rank(c.stack_class),
                      c.remaining_free_days, std::string_view(c.container_id)};
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const SlackCandidate& a, const SlackCandidate& b) { return key(a) < key(b); });
  return out;
}

/// Offers new appointments in blocks below the serviceable maximum, earliest
/// block first, in slack_priority() order.
inline RebalanceResult fill_slack(Schedule s, std::span<const SlackCandidate> candidates) {
  validate(s);
  RebalanceReport report;
  const int limit = s.threshold();
  for (const auto& c : slack_priority(candidates)) {
    if (s.find(c.container_id) >= 0) continue;
    TruckVisit visit{c.container_id, c.carrier_id, 0, VisitOrigin::IpsCreated, c.deadline_block};
    const int last = detail::last_legal_block(visit, s.block_count());
    int target = -1;
    for (int b = 0; b <= last && target < 0; ++b)
      if (s.blocks[static_cast<std::size_t>(b)].truck_count() < limit) target = b;
    if (target < 0) {
      if (std::none_of(s.blocks.begin(), s.blocks.end(),
                       [&](const TimeBlock& b) { return b.truck_count() < limit; }))
        break;
      continue;
    }
    s.book(target, std::move(visit));
    report.created.push_back({c.container_id, target});
  }
  if (!report.created.empty()) report.iterations = 1;
  report.converged = detect_congestion(s).empty();
  return {std::move(s), std::move(report)};
}

using AppointmentCallback = std::function<void(const CreatedAppointment&)>;

/// Alternates rebalance() and fill_slack() until neither changes anything.
/// `on_created` is called once per new appointment, in creation order.
inline RebalanceResult run_recursive(Schedule s, std::span<const SlackCandidate> unappointed,
                                     const AppointmentCallback& on_created = {}) {
  RebalanceReport total;
  const std::size_t max_rounds = static_cast<std::size_t>(s.total_visits()) + unappointed.size() + 2;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    auto balanced = rebalance(std::move(s));
    auto filled = fill_slack(std::move(balanced.schedule), unappointed);
    s = std::move(filled.schedule);
    total.absorb(balanced.report);
    total.absorb(filled.report);
    if (on_created)
      for (const auto& c : filled.report.created) on_created(c);
    if (!balanced.report.changed() && !filled.report.changed()) break;
  }
  // Drop repeated unresolvable notes from intermediate rounds; keep the last.
  std::vector<VisitMove> moves;
  for (const auto& m : total.moves)
    if (m.reason == MoveReason::Congestion) moves.push_back(m);
  auto final_check = rebalance(s);
  for (const auto& m : final_check.report.moves)
    if (m.reason == MoveReason::Unresolvable) moves.push_back(m);
  total.moves = std::move(moves);
  total.converged = detect_congestion(s).empty();
  return {std::move(s), std::move(total)};
}

}  // namespace ips
