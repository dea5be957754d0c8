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

// End-to-end evaluation of the four yard set-ups:
//
//   1  random stacking, no segments
//   2  random stacking inside S1/S2/S3 segments
//   3  branch-and-bound Z-score stacking inside segments
//   4  as 3, after recursive appointment rebalancing; the yard is re-solved
//      once against the final appointment book (the nightly re-plan)
//
// A day is evaluated by letting each block service at most its serviceable
// maximum of trucks (earliest bookings first) and retrieving the serviced
// containers block by block in pickup order. Each serviced truck costs
// DT(M_t of its block) + IO + rehandles * rehandle_minutes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ips/classifier.hpp"
#include "ips/engine_config.hpp"
#include "ips/scheduler.hpp"
#include "ips/segments.hpp"
#include "ips/solver.hpp"
#include "ips/stacking.hpp"

namespace ips {

enum class Scenario { RandomNoSeg = 1, RandomSeg = 2, ZScoreSeg = 3, Ips = 4 };

inline std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::RandomNoSeg: return "RandomNoSeg";
    case Scenario::RandomSeg: return "RandomSeg";
    case Scenario::ZScoreSeg: return "ZScoreSeg";
    case Scenario::Ips: return "IPS";
  }
  return "?";
}

inline Scenario scenario_from_number(int n) {
  if (n < 1 || n > 4) throw ValidationError("scenario must be 1, 2, 3 or 4");
  return static_cast<Scenario>(n);
}

struct Dataset {
  std::vector<Container> containers;
  Date current_date{};
};

struct BlockStat {
  int block = 0;
  int demand = 0;
  int serviced = 0;
  int threshold = 0;
  bool operator==(const BlockStat&) const = default;
};

struct DayEvaluation {
  std::optional<double> pt;  // unset when no truck was serviced
  int m = 0;
  int rehandles = 0;
  std::vector<BlockStat> histogram;
};

struct ScenarioResult {
  Scenario scenario = Scenario::RandomNoSeg;
  std::optional<double> pt;
  int m = 0;
  std::vector<BlockStat> histogram;
  std::optional<std::uint64_t> seed;  // only for the random set-ups
  int rehandles = 0;
  std::optional<Optimality> placement;
  RebalanceReport rebalance;
  YardState yard;
  Schedule schedule;
};

/// Builds the day's appointment book from the manifest, in manifest order.
inline Schedule schedule_from_manifest(std::span<const Container> containers,
                                       std::span<const Classification> classes, Date day,
                                       const TerminalParams& params) {
  Schedule s = Schedule::empty(day, params);
  for (std::size_t i = 0; i < containers.size(); ++i) {
    const auto& c = containers[i];
    if (!c.appointment_block) continue;
    if (*c.appointment_block >= params.blocks_per_day)
      throw ValidationError("container '" + c.id + "' is booked into block " +
                            std::to_string(*c.appointment_block) + " of a " +
                            std::to_string(params.blocks_per_day) + "-block day");
    const bool demurrage = classes[i].operational_category == Category::Cat3;
    s.book(*c.appointment_block,
           {c.id, c.carrier_id.value_or(c.owner_id), 0,
            demurrage ? VisitOrigin::IpsCreated : VisitOrigin::PreExisting, std::nullopt});
  }
  return s;
}

inline std::vector<PickupInfo> pickup_infos(std::span<const Container> containers,
                                            std::span<const Classification> classes,
                                            const Schedule& schedule) {
  std::vector<PickupInfo> out;
  for (std::size_t i = 0; i < containers.size(); ++i) {
    int block = schedule.find(containers[i].id);
    out.push_back({containers[i].id, block >= 0 ? std::optional<int>(block) : std::nullopt,
                   classes[i].stack_class, classes[i].remaining_free_days});
  }
  return out;
}

inline std::vector<SlackCandidate> slack_candidates(std::span<const Container> containers,
                                                    std::span<const Classification> classes,
                                                    const Schedule& schedule) {
  std::vector<SlackCandidate> out;
  for (std::size_t i = 0; i < containers.size(); ++i) {
    if (schedule.find(containers[i].id) >= 0) continue;
    const auto& c = containers[i];
    out.push_back({c.id, c.carrier_id.value_or(c.owner_id), classes[i].operational_category,
                   classes[i].stack_class, classes[i].remaining_free_days, std::nullopt});
  }
  return out;
}

inline CategoryCensus category_census(std::span<const Classification> classes) {
  CategoryCensus census{0, 0, 0};
  for (const auto& c : classes) ++census[static_cast<std::size_t>(c.operational_category)];
  return census;
}

/// Services the schedule against the yard and prices every serviced truck.
inline DayEvaluation evaluate_day(const YardState& yard, const Schedule& schedule,
                                  const PickupOrder& order) {
  DayEvaluation out;
  const int limit = schedule.threshold();
  std::vector<std::pair<int, std::string>> serviced;  // (block, id)
  for (const auto& block : schedule.blocks) {
    auto visits = block.visits;
    std::sort(visits.begin(), visits.end(),
              [](const TruckVisit& a, const TruckVisit& b) { return a.booked_at < b.booked_at; });
    const int served = std::min(block.truck_count(), limit);
    for (int i = 0; i < served; ++i)
      serviced.emplace_back(block.index, visits[static_cast<std::size_t>(i)].container_id);
    out.histogram.push_back({block.index, block.truck_count(), served, limit});
  }
  std::stable_sort(serviced.begin(), serviced.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return order.rank(a.second) < order.rank(b.second);
  });

  std::vector<std::string> sequence;
  for (const auto& [block, id] : serviced) sequence.push_back(id);
  const auto trace = simulate_retrievals(yard, sequence);
  std::map<std::string, int> rehandles;
  for (std::size_t i = 0; i < trace.sequence.size(); ++i) rehandles[trace.sequence[i]] = trace.rehandles[i];

  double sum = 0.0;
  for (const auto& [block, id] : serviced) {
    const int m_t = schedule.blocks[static_cast<std::size_t>(block)].truck_count();
    auto it = rehandles.find(id);
    const int moves = it == rehandles.end() ? 0 : it->second;
    sum += processing_time(m_t, schedule.params) + moves * schedule.params.rehandle_minutes;
  }
  out.m = static_cast<int>(serviced.size());
  out.rehandles = trace.total;
  if (out.m > 0) out.pt = sum / out.m;
  return out;
}

namespace detail {

struct Prepared {
  std::vector<Classification> classes;
  Schedule schedule;
  YardState yard;  // empty, segmented or not per scenario
  std::vector<PlacementItem> items;
};

inline Prepared prepare(const Dataset& data, Scenario scenario, const EngineConfig& config) {
  validate(config.terminal);
  for (const auto& c : data.containers) validate(c);
  Prepared p;
  p.classes = classify_all(data.containers, data.current_date, config.discriminant);
  p.schedule = schedule_from_manifest(data.containers, p.classes, data.current_date, config.terminal);

  YardLayout layout = config.yard;
  layout.total_container_census = static_cast<int>(data.containers.size());
  validate(layout, config.terminal.max_tier);
  p.yard = YardState(layout, config.terminal.max_tier);
  const bool segmented = scenario != Scenario::RandomNoSeg;
  if (segmented)
    apply_segments(p.yard, partition_segments(layout, config.terminal.max_tier, category_census(p.classes)));

  for (std::size_t i = 0; i < data.containers.size(); ++i) {
    const Category cat = p.classes[i].operational_category;
    p.items.push_back({data.containers[i].id, segmented ? segment_for(cat) : SegmentId::None,
                       cat == Category::Cat3});
  }
  return p;
}

inline PlacementPlan zscore_placement(const Prepared& p, const PickupOrder& order,
                                      const EngineConfig& config) {
  PlacementModel model{p.yard, p.items, order, config.objective, false};
  return solve_batch(model, config.solver);
}

}  // namespace detail

inline ScenarioResult run_scenario(const Dataset& data, Scenario scenario,
                                   const EngineConfig& config, std::uint64_t seed) {
  auto prepared = detail::prepare(data, scenario, config);
  ScenarioResult result;
  result.scenario = scenario;
  result.schedule = prepared.schedule;

  auto order = PickupOrder::from_infos(pickup_infos(data.containers, prepared.classes, prepared.schedule));
  switch (scenario) {
    case Scenario::RandomNoSeg:
    case Scenario::RandomSeg:
      result.seed = seed;
      result.yard = random_placement(prepared.yard, prepared.items, seed);
      break;
    case Scenario::ZScoreSeg: {
      auto plan = detail::zscore_placement(prepared, order, config);
      result.placement = plan.optimality;
      result.yard = apply_plan({prepared.yard, prepared.items, order, config.objective, false}, plan);
      break;
    }
    case Scenario::Ips: {
      auto candidates = slack_candidates(data.containers, prepared.classes, prepared.schedule);
      auto balanced = run_recursive(prepared.schedule, candidates);
      result.schedule = std::move(balanced.schedule);
      result.rebalance = std::move(balanced.report);
      order = PickupOrder::from_infos(pickup_infos(data.containers, prepared.classes, result.schedule));
      auto plan = detail::zscore_placement(prepared, order, config);
      result.placement = plan.optimality;
      result.yard = apply_plan({prepared.yard, prepared.items, order, config.objective, false}, plan);
      break;
    }
  }

  auto day = evaluate_day(result.yard, result.schedule, order);
  result.pt = day.pt;
  result.m = day.m;
  result.rehandles = day.rehandles;
  result.histogram = std::move(day.histogram);
  return result;
}

struct HistogramRow {
  int block = 0;
  int demand_before = 0;
  int demand_after = 0;
  int threshold = 0;

  int delta() const { return demand_after - demand_before; }
  bool operator==(const HistogramRow&) const = default;
};

/// Per-block demand before and after a scheduling pass.
inline std::vector<HistogramRow> histogram(const Schedule& before, const Schedule& after) {
  if (before.block_count() != after.block_count())
    throw ValidationError("histogram needs schedules with the same blocks");
  std::vector<HistogramRow> rows;
  for (int b = 0; b < before.block_count(); ++b)
    rows.push_back({b, before.blocks[static_cast<std::size_t>(b)].truck_count(),
                    after.blocks[static_cast<std::size_t>(b)].truck_count(), after.threshold()});
  return rows;
}

inline std::string format_minutes(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

/// key = value report, one entry per line.
inline std::string to_text(const ScenarioResult& r) {
  std::ostringstream os;
  os << "scenario = " << static_cast<int>(r.scenario) << "\n";
  os << "scenario_name = " << to_string(r.scenario) << "\n";
  os << "seed = " << (r.seed ? std::to_string(*r.seed) : "none") << "\n";
  os << "pt_defined = " << (r.pt ? "true" : "false") << "\n";
  os << "pt = " << (r.pt ? format_minutes(*r.pt) : "undefined") << "\n";
  os << "m = " << r.m << "\n";
  os << "rehandles = " << r.rehandles << "\n";
  os << "placement = " << (r.placement ? to_string(*r.placement) : "random") << "\n";
  os << "moves = " << r.rebalance.moved_count() << "\n";
  os << "created = " << r.rebalance.created.size() << "\n";
  os << "converged = " << (r.rebalance.converged ? "true" : "false") << "\n";
  for (const auto& b : r.histogram) {
    os << "histogram." << b.block << ".demand = " << b.demand << "\n";
    os << "histogram." << b.block << ".serviced = " << b.serviced << "\n";
    os << "histogram." << b.block << ".threshold = " << b.threshold << "\n";
  }
  return os.str();
}

inline std::string csv_header() { return "scenario,pt,m,seed\n"; }

inline std::string to_csv_row(const ScenarioResult& r) {
  std::ostringstream os;
  os << static_cast<int>(r.scenario) << "," << (r.pt ? format_minutes(*r.pt) : "") << "," << r.m
     << "," << (r.seed ? std::to_string(*r.seed) : "") << "\n";
  return os.str();
}

inline std::string to_csv(std::span<const ScenarioResult> results) {
  std::string out = csv_header();
  for (const auto& r : results) out += to_csv_row(r);
  return out;
}

}  // namespace ips
