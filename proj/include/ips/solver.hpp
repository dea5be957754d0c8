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

// Slot assignment as a 0-1 program.
//
// Variables: x[c,s] = 1 when container c takes slot s, r[c] = 1 when an
// already-placed container ends up somewhere else. Constraints: every
// container gets exactly one slot, a slot holds at most one container, a
// slot above ground needs the slot below it occupied, the slot lies in the
// container's segment and below the tier limit. The objective is
//
//   rehandle_weight   * rehandles needed to retrieve in pickup order
// + relocation_weight * number of relocated containers
// + zorder_weight     * stacked pairs with the later pickup on top
//
// solve_batch() runs best-first branch and bound. A feasible stacking is a
// sequence per stack; the search inserts the containers one at a time into
// any stack at any height above the fixed base, which reaches every
// sequence exactly once. The bound at a node is the exact z-order count and
// the number of "blocking" containers (ones sitting above an earlier pickup,
// each of which must be moved at least once) of the partial stacking, plus
// for each unplaced container its cheapest insertion against the placed
// ones alone. Every term only grows as containers are added.

#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "ips/model.hpp"
#include "ips/stacking.hpp"
#include "ips/yard.hpp"

namespace ips {

struct ObjectiveWeights {
  double rehandle = 1.0;
  double relocation = 2.0;
  double zorder = 1.0;
  bool operator==(const ObjectiveWeights&) const = default;
};

struct SolverBudget {
  std::size_t max_nodes = 200000;
  bool operator==(const SolverBudget&) const = default;
};

struct PlacementItem {
  std::string id;
  SegmentId segment = SegmentId::None;
  bool demurrage = false;
};

struct PlacementModel {
  YardState yard;  // geometry, segments and containers already placed
  std::vector<PlacementItem> incoming;
  PickupOrder pickup_order;
  ObjectiveWeights weights;
  bool allow_relocation = false;
};

enum class Optimality { ProvenOptimal, Heuristic };

inline std::string_view to_string(Optimality o) {
  return o == Optimality::ProvenOptimal ? "proven_optimal" : "heuristic";
}

struct Relocation {
  std::string container_id;
  Slot from;
  Slot to;
  bool operator==(const Relocation&) const = default;
};

struct PlacementPlan {
  std::map<std::string, Slot> assignment;  // every container in the final yard
  std::vector<Relocation> relocations;
  double objective = 0.0;
  Optimality optimality = Optimality::Heuristic;
  std::size_t nodes = 0;
  bool operator==(const PlacementPlan&) const = default;
};

/// Objective of a finished yard.
inline double placement_objective(const YardState& yard, const PickupOrder& order,
                                  const ObjectiveWeights& w, int relocations = 0) {
  return w.rehandle * expected_rehandles(yard, order) + w.relocation * relocations +
         w.zorder * zorder_violations(yard, order);
}

/// The model's yard with the plan applied.
inline YardState apply_plan(const PlacementModel& model, const PlacementPlan& plan) {
  YardState out = model.yard;
  out.placements = plan.assignment;
  for (const auto& item : model.incoming)
    if (item.segment != SegmentId::None) out.required_segments[item.id] = item.segment;
  return out;
}

namespace detail {

constexpr double kEps = 1e-9;

struct Problem {
  Grid grid;
  int rows = 1;
  std::vector<std::string> ids;      // existing containers, then incoming
  std::vector<int> rank;
  std::vector<SegmentId> need;
  std::vector<bool> demurrage;
  Stacks base;                       // fixed containers per stack
  std::vector<int> movable;          // containers the search places
  std::vector<std::pair<int, int>> origin;  // (stack, tier) before solving, or (-1,-1)
  std::vector<int> retrieval;        // expected containers, earliest first
  ObjectiveWeights weights;

  bool allowed(int c, int s) const {
    SegmentId want = need[static_cast<std::size_t>(c)];
    return want == SegmentId::None || grid.stack_segment[static_cast<std::size_t>(s)] == want;
  }

  /// Objective of a complete stacking.
  double evaluate(const Stacks& stacks, int* relocations_out = nullptr) const {
    int relocations = 0;
    for (std::size_t s = 0; s < stacks.size(); ++s)
      for (std::size_t t = 0; t < stacks[s].size(); ++t) {
        auto [os, ot] = origin[static_cast<std::size_t>(stacks[s][t])];
        if (os >= 0 && (os != static_cast<int>(s) || ot != static_cast<int>(t))) ++relocations;
      }
    if (relocations_out) *relocations_out = relocations;
    const int rehandles = simulate(grid, stacks, retrieval, ids.size());
    return weights.rehandle * rehandles + weights.relocation * relocations +
           weights.zorder * zorder_pairs(stacks, rank);
  }

  /// Objective with only the placed containers retrieved (for constructive
  /// heuristics working on a partial yard).
  double evaluate_partial(const Stacks& stacks) const {
    std::vector<bool> placed(ids.size(), false);
    for (const auto& st : stacks)
      for (int c : st) placed[static_cast<std::size_t>(c)] = true;
    std::vector<int> seq;
    for (int c : retrieval)
      if (placed[static_cast<std::size_t>(c)]) seq.push_back(c);
    return weights.rehandle * simulate(grid, stacks, seq, ids.size()) +
           weights.zorder * zorder_pairs(stacks, rank);
  }
};

inline Problem build_problem(const PlacementModel& model) {
  const YardState& yard = model.yard;
  validate(yard.layout, yard.max_tier);
  if (auto bad = validate_yard(yard); !bad.empty())
    throw ValidationError("placement model yard is invalid: " + bad.front().detail);

  Problem p;
  p.grid = Grid::of(yard);
  p.rows = yard.layout.width_rows;
  p.weights = model.weights;
  p.base.resize(static_cast<std::size_t>(p.grid.size()));

  auto add = [&](const std::string& id, SegmentId need, bool demurrage) {
    p.ids.push_back(id);
    p.rank.push_back(model.pickup_order.rank(id));
    p.need.push_back(yard.segmented() ? need : SegmentId::None);
    p.demurrage.push_back(demurrage);
    p.origin.emplace_back(-1, -1);
    return static_cast<int>(p.ids.size()) - 1;
  };

  auto named = yard.stacks();
  std::map<std::string, int> index;
  for (std::size_t s = 0; s < named.size(); ++s)
    for (std::size_t t = 0; t < named[s].size(); ++t) {
      const auto& id = named[s][t];
      auto req = yard.required_segments.find(id);
      int c = add(id, req == yard.required_segments.end() ? SegmentId::None : req->second, false);
      index.emplace(id, c);
      if (model.allow_relocation) {
        p.origin[static_cast<std::size_t>(c)] = {static_cast<int>(s), static_cast<int>(t)};
        p.movable.push_back(c);
      } else {
        p.base[s].push_back(c);
      }
    }
  for (const auto& item : model.incoming) {
    if (item.id.empty()) throw ValidationError("incoming container without id");
    if (index.count(item.id)) throw ValidationError("container '" + item.id + "' is already placed");
    int c = add(item.id, item.segment, item.demurrage);
    index.emplace(item.id, c);
    p.movable.push_back(c);
  }

  // Latest pickups are inserted first so early leaves are already well stacked.
  std::stable_sort(p.movable.begin(), p.movable.end(), [&](int a, int b) {
    return p.rank[static_cast<std::size_t>(a)] > p.rank[static_cast<std::size_t>(b)];
  });

  std::vector<std::pair<int, int>> expected;
  for (std::size_t c = 0; c < p.ids.size(); ++c)
    if (p.rank[c] != PickupOrder::kNever) expected.emplace_back(p.rank[c], static_cast<int>(c));
  std::sort(expected.begin(), expected.end());
  for (auto [r, c] : expected) p.retrieval.push_back(c);

  // Capacity per segment.
  std::map<SegmentId, int> free_space;
  int total_free = 0;
  for (int s = 0; s < p.grid.size(); ++s) {
    int room = yard.max_tier - static_cast<int>(p.base[static_cast<std::size_t>(s)].size());
    free_space[p.grid.stack_segment[static_cast<std::size_t>(s)]] += room;
    total_free += room;
  }
  std::map<SegmentId, int> demand;
  for (int c : p.movable) ++demand[p.need[static_cast<std::size_t>(c)]];
  if (static_cast<int>(p.movable.size()) > total_free)
    throw InfeasibleError("yard has " + std::to_string(total_free) + " free slots for " +
                          std::to_string(p.movable.size()) + " containers");
  for (auto [seg, count] : demand)
    if (seg != SegmentId::None && count > free_space[seg])
      throw InfeasibleError("segment " + std::string(to_string(seg)) + " has " +
                            std::to_string(free_space[seg]) + " free slots for " +
                            std::to_string(count) + " containers");
  return p;
}

inline PlacementPlan make_plan(const Problem& p, const Stacks& stacks, double objective,
                               Optimality optimality, std::size_t nodes) {
  PlacementPlan plan;
  plan.objective = objective;
  plan.optimality = optimality;
  plan.nodes = nodes;
  for (std::size_t s = 0; s < stacks.size(); ++s)
    for (std::size_t t = 0; t < stacks[s].size(); ++t) {
      const int c = stacks[s][t];
      const int bay = static_cast<int>(s) / p.rows;
      Slot slot{bay, static_cast<int>(s) % p.rows, static_cast<int>(t), p.grid.stack_segment[s]};
      plan.assignment.emplace(p.ids[static_cast<std::size_t>(c)], slot);
      auto [os, ot] = p.origin[static_cast<std::size_t>(c)];
      if (os >= 0 && (os != static_cast<int>(s) || ot != static_cast<int>(t))) {
        Slot from{os / p.rows, os % p.rows, ot, p.grid.stack_segment[static_cast<std::size_t>(os)]};
        plan.relocations.push_back({p.ids[static_cast<std::size_t>(c)], from, slot});
      }
    }
  std::sort(plan.relocations.begin(), plan.relocations.end(),
            [](const Relocation& a, const Relocation& b) { return a.container_id < b.container_id; });
  return plan;
}

/// Places `order` one by one on top of the stack that raises the partial
/// objective least; ties to the lowest bay, then row. A slot is skipped when
/// taking it would leave a segment too small for the containers still to
/// come that require it.
inline Stacks construct(const Problem& p, Stacks stacks, const std::vector<int>& order) {
  std::map<SegmentId, int> room, pending;
  for (int s = 0; s < p.grid.size(); ++s)
    room[p.grid.stack_segment[static_cast<std::size_t>(s)]] +=
        p.grid.max_tier - static_cast<int>(stacks[static_cast<std::size_t>(s)].size());
  for (int c : order) ++pending[p.need[static_cast<std::size_t>(c)]];
  pending.erase(SegmentId::None);

  for (int c : order) {
    if (auto it = pending.find(p.need[static_cast<std::size_t>(c)]); it != pending.end()) --it->second;
    const double before = p.evaluate_partial(stacks);
    int best = -1;
    double best_delta = std::numeric_limits<double>::infinity();
    for (int s = 0; s < p.grid.size(); ++s) {
      auto& stack = stacks[static_cast<std::size_t>(s)];
      if (!p.allowed(c, s) || static_cast<int>(stack.size()) >= p.grid.max_tier) continue;
      const SegmentId seg = p.grid.stack_segment[static_cast<std::size_t>(s)];
      if (auto it = pending.find(seg); it != pending.end() && room[seg] - 1 < it->second) continue;
      stack.push_back(c);
      double delta = p.evaluate_partial(stacks) - before;
      stack.pop_back();
      if (delta < best_delta - kEps) {
        best_delta = delta;
        best = s;
      }
    }
    if (best < 0)
      throw InfeasibleError("no feasible slot for container '" +
                            p.ids[static_cast<std::size_t>(c)] + "'");
    stacks[static_cast<std::size_t>(best)].push_back(c);
    --room[p.grid.stack_segment[static_cast<std::size_t>(best)]];
  }
  return stacks;
}

/// Urgency order: demurrage first, then earliest expected pickup.
inline std::vector<int> urgency_order(const Problem& p) {
  std::vector<int> order = p.movable;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
    if (p.demurrage[ia] != p.demurrage[ib]) return static_cast<bool>(p.demurrage[ia]);
    if (p.rank[ia] != p.rank[ib]) return p.rank[ia] < p.rank[ib];
    return p.ids[ia] < p.ids[ib];
  });
  return order;
}

struct Node {
  double bound = 0.0;
  std::uint64_t seq = 0;
  int depth = 0;
  Stacks stacks;
};

struct NodeAfter {
  bool operator()(const Node& a, const Node& b) const {
    if (std::abs(a.bound - b.bound) > kEps) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

/// Admissible lower bound for completing `stacks` with p.movable[depth..].
inline double lower_bound(const Problem& p, const Stacks& stacks, int depth) {
  const auto& rank = p.rank;
  double bound = p.weights.zorder * zorder_pairs(stacks, rank);
  int blocking = 0;
  for (const auto& st : stacks) {
    int lowest = INT_MAX;
    for (int c : st) {
      if (lowest < rank[static_cast<std::size_t>(c)]) ++blocking;
      lowest = std::min(lowest, rank[static_cast<std::size_t>(c)]);
    }
  }
  bound += p.weights.rehandle * blocking;

  std::map<SegmentId, int> room;
  for (int s = 0; s < p.grid.size(); ++s)
    room[p.grid.stack_segment[static_cast<std::size_t>(s)]] +=
        p.grid.max_tier - static_cast<int>(stacks[static_cast<std::size_t>(s)].size());
  std::map<SegmentId, int> need;
  int remaining = 0;
  for (std::size_t i = static_cast<std::size_t>(depth); i < p.movable.size(); ++i) {
    ++remaining;
    SegmentId seg = p.need[static_cast<std::size_t>(p.movable[i])];
    if (seg != SegmentId::None) ++need[seg];
  }
  int total_room = 0;
  for (auto [seg, r] : room) total_room += r;
  if (remaining > total_room) return std::numeric_limits<double>::infinity();
  for (auto [seg, n] : need)
    if (n > room[seg]) return std::numeric_limits<double>::infinity();

  for (std::size_t i = static_cast<std::size_t>(depth); i < p.movable.size(); ++i) {
    const int u = p.movable[i];
    const int ru = rank[static_cast<std::size_t>(u)];
    double cheapest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < p.grid.size() && cheapest > 0.0; ++s) {
      const auto& st = stacks[static_cast<std::size_t>(s)];
      if (!p.allowed(u, s) || static_cast<int>(st.size()) >= p.grid.max_tier) continue;
      const std::size_t floor = p.base[static_cast<std::size_t>(s)].size();
      for (std::size_t pos = floor; pos <= st.size(); ++pos) {
        int below_earlier = 0, above_later = 0;
        for (std::size_t k = 0; k < pos; ++k)
          if (rank[static_cast<std::size_t>(st[k])] < ru) ++below_earlier;
        for (std::size_t k = pos; k < st.size(); ++k)
          if (rank[static_cast<std::size_t>(st[k])] > ru) ++above_later;
        double cost = p.weights.zorder * (below_earlier + above_later) +
                      p.weights.rehandle * (below_earlier > 0 ? 1 : 0);
        cheapest = std::min(cheapest, cost);
      }
    }
    if (!std::isfinite(cheapest)) return cheapest;
    bound += cheapest;
  }
  return bound;
}

}  // namespace detail

/// Greedy fallback: containers in urgency order (demurrage first, then
/// earliest pickup), each on the slot with the smallest objective increase.
inline PlacementPlan solve_greedy(const PlacementModel& model) {
  auto p = detail::build_problem(model);
  // Relocatable containers start where they are; greedy never moves them.
  detail::Stacks stacks = p.base;
  std::vector<int> order;
  for (int c : detail::urgency_order(p)) {
    if (p.origin[static_cast<std::size_t>(c)].first < 0) order.push_back(c);
  }
  for (std::size_t c = 0; c < p.ids.size(); ++c)
    if (auto [os, ot] = p.origin[c]; os >= 0) stacks[static_cast<std::size_t>(os)].push_back(static_cast<int>(c));
  stacks = detail::construct(p, std::move(stacks), order);
  return detail::make_plan(p, stacks, p.evaluate(stacks), Optimality::Heuristic, 0);
}

/// Best-first branch and bound. Proven optimal when the search closes within
/// the node budget, otherwise the best stacking found (never worse than the
/// greedy and latest-first constructions it starts from).
inline PlacementPlan solve_batch(const PlacementModel& model, const SolverBudget& budget) {
  if (budget.max_nodes == 0) throw ValidationError("solver budget must be positive");
  auto p = detail::build_problem(model);

  detail::Stacks best_stacks;
  double best = std::numeric_limits<double>::infinity();
  auto offer = [&](const detail::Stacks& stacks, double value) {
    if (value < best - detail::kEps) {
      best = value;
      best_stacks = stacks;
    }
  };

  {
    auto greedy = solve_greedy(model);
    // Rebuild the greedy stacking in problem indices.
    std::map<std::string, int> index;
    for (std::size_t c = 0; c < p.ids.size(); ++c) index.emplace(p.ids[c], static_cast<int>(c));
    detail::Stacks stacks(static_cast<std::size_t>(p.grid.size()));
    std::vector<std::pair<Slot, int>> slots;
    for (const auto& [id, slot] : greedy.assignment) slots.emplace_back(slot, index.at(id));
    std::sort(slots.begin(), slots.end());
    for (const auto& [slot, c] : slots)
      stacks[static_cast<std::size_t>(slot.bay * p.rows + slot.row)].push_back(c);
    offer(stacks, greedy.objective);

    std::vector<int> latest_first = p.movable;  // already sorted latest pickup first
    auto constructed = detail::construct(p, p.base, latest_first);
    offer(constructed, p.evaluate(constructed));
  }

  const int depth_total = static_cast<int>(p.movable.size());
  if (depth_total == 0)
    return detail::make_plan(p, p.base, p.evaluate(p.base), Optimality::ProvenOptimal, 1);

  std::priority_queue<detail::Node, std::vector<detail::Node>, detail::NodeAfter> open;
  std::uint64_t seq = 0;
  std::size_t generated = 1;
  open.push({detail::lower_bound(p, p.base, 0), seq++, 0, p.base});
  bool exhausted = false;

  while (!open.empty()) {
    if (open.top().bound >= best - detail::kEps) {
      open = {};
      break;
    }
    if (generated >= budget.max_nodes) {
      exhausted = true;
      break;
    }
    detail::Node node = open.top();
    open.pop();

    const int c = p.movable[static_cast<std::size_t>(node.depth)];
    for (int s = 0; s < p.grid.size(); ++s) {
      const auto& st = node.stacks[static_cast<std::size_t>(s)];
      if (!p.allowed(c, s) || static_cast<int>(st.size()) >= p.grid.max_tier) continue;
      const std::size_t floor = p.base[static_cast<std::size_t>(s)].size();
      for (std::size_t pos = floor; pos <= st.size(); ++pos) {
        detail::Stacks child = node.stacks;
        auto& cs = child[static_cast<std::size_t>(s)];
        cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(pos), c);
        ++generated;
        if (node.depth + 1 == depth_total) {
          offer(child, p.evaluate(child));
          continue;
        }
        double bound = detail::lower_bound(p, child, node.depth + 1);
        if (bound < best - detail::kEps) open.push({bound, seq++, node.depth + 1, std::move(child)});
      }
    }
  }

  const bool proven = !exhausted || open.empty() || open.top().bound >= best - detail::kEps;
  return detail::make_plan(p, best_stacks, best,
                           proven ? Optimality::ProvenOptimal : Optimality::Heuristic, generated);
}

/// Recommends a slot for one new container without disturbing the yard.
/// Every top-of-stack slot in the container's segment is scored by the
/// objective increase; ties prefer the stack whose top leaves latest (empty
/// ground counts as latest), then the one nearest the exit gate. With
/// relocation allowed, single moves of a stack top are also tried and win
/// only when they beat the best relocation-free slot by more than the
/// relocation weight.
inline PlacementPlan place_incremental(const YardState& yard, const PlacementItem& item,
                                       const PickupOrder& order, const ObjectiveWeights& weights,
                                       bool allow_relocation = true) {
  if (yard.contains(item.id)) throw ValidationError("container '" + item.id + "' is already placed");
  if (auto bad = validate_yard(yard); !bad.empty())
    throw ValidationError("yard is invalid: " + bad.front().detail);

  const double before = placement_objective(yard, order, weights);
  auto stacks = yard.stacks();
  const int rows = yard.layout.width_rows;
  const SegmentId want = yard.segmented() ? item.segment : SegmentId::None;
  auto allowed = [&](const std::string& id, int s) {
    SegmentId need = want;
    if (id != item.id) {
      auto it = yard.required_segments.find(id);
      need = (it == yard.required_segments.end() || !yard.segmented()) ? SegmentId::None : it->second;
    }
    return need == SegmentId::None || yard.segment_of_bay(s / rows) == need;
  };
  auto has_room = [&](int s) { return static_cast<int>(stacks[static_cast<std::size_t>(s)].size()) < yard.max_tier; };
  auto exit_distance = [&](int s) {
    return std::abs(s / rows - yard.layout.exit_gate.bay) + std::abs(s % rows - yard.layout.exit_gate.row);
  };

  struct Choice {
    double cost;
    int top_rank;  // negated preference: larger = later top
    int distance;
    int stack;
  };
  auto better = [](const Choice& a, const Choice& b) {
    if (std::abs(a.cost - b.cost) > detail::kEps) return a.cost < b.cost;
    if (a.top_rank != b.top_rank) return a.top_rank > b.top_rank;
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.stack < b.stack;
  };

  std::optional<Choice> best;
  for (int s = 0; s < yard.layout.stack_count(); ++s) {
    if (!allowed(item.id, s) || !has_room(s)) continue;
    YardState trial = yard;
    trial.push(item.id, s / rows, s % rows);
    const auto& st = stacks[static_cast<std::size_t>(s)];
    Choice choice{placement_objective(trial, order, weights) - before,
                  st.empty() ? INT_MAX : order.rank(st.back()), exit_distance(s), s};
    if (!best || better(choice, *best)) best = choice;
  }
  if (!best)
    throw InfeasibleError("segment " + std::string(to_string(item.segment)) +
                          " has no free slot for container '" + item.id + "'");

  PlacementPlan plan;
  YardState result = yard;
  result.push(item.id, best->stack / rows, best->stack % rows);
  plan.objective = best->cost;

  if (allow_relocation) {
    std::optional<std::tuple<double, int, int, int>> move;  // cost, from, to, target stack
    for (int from = 0; from < yard.layout.stack_count(); ++from) {
      const auto& src = stacks[static_cast<std::size_t>(from)];
      if (src.empty()) continue;
      const std::string& top = src.back();
      for (int to = 0; to < yard.layout.stack_count(); ++to) {
        if (to == from || !allowed(top, to) || !has_room(to)) continue;
        YardState moved = yard;
        moved.placements.erase(top);
        moved.push(top, to / rows, to % rows);
        for (int s = 0; s < yard.layout.stack_count(); ++s) {
          if (!allowed(item.id, s) || moved.stack_height(s / rows, s % rows) >= yard.max_tier) continue;
          YardState trial = moved;
          trial.push(item.id, s / rows, s % rows);
          double cost = placement_objective(trial, order, weights, 1) - before;
          if (cost < best->cost - detail::kEps && (!move || cost < std::get<0>(*move) - detail::kEps))
            move = std::tuple{cost, from, to, s};
        }
      }
    }
    if (move) {
      auto [cost, from, to, s] = *move;
      const std::string top = stacks[static_cast<std::size_t>(from)].back();
      result = yard;
      Slot old_slot = result.placements.at(top);
      result.placements.erase(top);
      Slot new_slot = result.push(top, to / rows, to % rows);
      result.push(item.id, s / rows, s % rows);
      plan.relocations.push_back({top, old_slot, new_slot});
      plan.objective = cost;
    }
  }
  plan.assignment = result.placements;
  plan.optimality = Optimality::Heuristic;
  return plan;
}

/// Seeded 64-bit LCG (MMIX constants) used by the random-stacking baselines.
using StackingRng = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                                    1442695040888963407ULL, 0ULL>;

/// Drops each item on a uniformly chosen stack with room in its segment.
inline YardState random_placement(YardState yard, const std::vector<PlacementItem>& items,
                                  std::uint64_t seed) {
  StackingRng rng(seed);
  const int rows = yard.layout.width_rows;
  std::vector<int> heights(static_cast<std::size_t>(yard.layout.stack_count()), 0);
  for (const auto& [id, slot] : yard.placements) ++heights[static_cast<std::size_t>(yard.stack_index(slot.bay, slot.row))];
  for (const auto& item : items) {
    std::vector<int> open;
    for (int s = 0; s < yard.layout.stack_count(); ++s) {
      bool ok = !yard.segmented() || item.segment == SegmentId::None ||
                yard.segment_of_bay(s / rows) == item.segment;
      if (ok && heights[static_cast<std::size_t>(s)] < yard.max_tier) open.push_back(s);
    }
    if (open.empty())
      throw InfeasibleError("no free slot for container '" + item.id + "'");
    const int s = open[static_cast<std::size_t>((rng() >> 33) % open.size())];
    yard.placements[item.id] = Slot{s / rows, s % rows, heights[static_cast<std::size_t>(s)]++,
                                    yard.segment_of_bay(s / rows)};
    if (yard.segmented() && item.segment != SegmentId::None) yard.required_segments[item.id] = item.segment;
  }
  return yard;
}

}  // namespace ips
