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

// HTTP front end. One writer thread owns the mutable engine state; handlers
// post commands to it and wait for the reply. Readers take the latest
// published snapshot, which is never modified after publication. Scenario
// runs (POST /optimize) execute on a separate job thread against a snapshot.

#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "ips/config.hpp"
#include "ips/manifest.hpp"
#include "ips/metrics.hpp"
#include "ips/scenario.hpp"
#include "ips/source.hpp"

namespace ips {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON views

inline json to_json(const Slot& s) {
  return {{"bay", s.bay}, {"row", s.row}, {"tier", s.tier}, {"segment", to_string(s.segment)}};
}

inline json to_json(const Classification& c) {
  return {{"cargo_value", c.cargo_value},
          {"consignee_value", c.consignee_value},
          {"scores", c.scores},
          {"stack_class", to_string(c.stack_class)},
          {"category", to_string(c.operational_category)},
          {"remaining_free_days", c.remaining_free_days}};
}

inline json to_json(const RebalanceReport& r) {
  json moves = json::array(), created = json::array();
  for (const auto& m : r.moves)
    moves.push_back({{"container_id", m.container_id},
                     {"from_block", m.from_block},
                     {"to_block", m.to_block},
                     {"reason", to_string(m.reason)}});
  for (const auto& c : r.created) created.push_back({{"container_id", c.container_id}, {"block", c.block}});
  return {{"moves", moves}, {"created", created}, {"iterations", r.iterations}, {"converged", r.converged}};
}

inline json to_json(const ScenarioResult& r) {
  json hist = json::array();
  for (const auto& b : r.histogram)
    hist.push_back({{"block", b.block}, {"demand", b.demand}, {"serviced", b.serviced}, {"threshold", b.threshold}});
  json j = {{"scenario", static_cast<int>(r.scenario)},
            {"scenario_name", to_string(r.scenario)},
            {"pt", r.pt ? json(*r.pt) : json(nullptr)},
            {"pt_defined", r.pt.has_value()},
            {"m", r.m},
            {"rehandles", r.rehandles},
            {"seed", r.seed ? json(*r.seed) : json(nullptr)},
            {"placement", r.placement ? json(to_string(*r.placement)) : json("random")},
            {"histogram", hist},
            {"rebalance", to_json(r.rebalance)},
            {"report", to_text(r)}};
  return j;
}

// ---------------------------------------------------------------------------
// Engine state

inline Date today_utc() {
  return Date{std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())};
}

/// Operational day: configured, else the latest arrival, else today (UTC).
inline Date operational_day(const EngineConfig& config, std::span<const Container> containers) {
  if (config.operational_day) return *config.operational_day;
  if (containers.empty()) return today_utc();
  Date latest = containers.front().arrival_date;
  for (const auto& c : containers) latest = std::max(latest, c.arrival_date);
  return latest;
}

struct EngineState {
  std::uint64_t version = 0;
  EngineConfig config;
  Date day{};
  std::vector<Container> containers;
  std::vector<Classification> classes;
  YardState yard;
  Schedule ingested;  // appointment book as loaded, for before/after views
  Schedule schedule;

  Dataset dataset() const { return {containers, day}; }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < containers.size(); ++i)
      if (containers[i].id == id) return i;
    return std::nullopt;
  }

  PickupOrder pickup_order() const {
    return PickupOrder::from_infos(pickup_infos(containers, classes, schedule));
  }
};

/// Initial state: the manifest stacked by the Z-score solver inside segments.
inline EngineState initial_state(const EngineConfig& config, std::vector<Container> containers) {
  EngineState s;
  s.config = config;
  s.day = operational_day(config, containers);
  if (containers.empty()) {
    validate(config.terminal);
    validate(config.yard, config.terminal.max_tier);
    s.yard = YardState(config.yard, config.terminal.max_tier);
    if (config.yard.length_bays >= 3)
      apply_segments(s.yard, partition_segments(config.yard, config.terminal.max_tier, {0, 0, 0}));
    s.schedule = Schedule::empty(s.day, config.terminal);
    s.ingested = s.schedule;
    return s;
  }
  s.containers = std::move(containers);
  auto result = run_scenario(s.dataset(), Scenario::ZScoreSeg, config, config.seed);
  s.classes = classify_all(s.containers, s.day, config.discriminant);
  s.yard = std::move(result.yard);
  s.schedule = std::move(result.schedule);
  s.ingested = s.schedule;
  return s;
}

/// Re-places a container after its appointment changed, when it sits on top
/// of its stack. It stays put when buried, when its segment is full, or when
/// its current slot is already as good as the recommended one.
inline std::optional<Relocation> replace_on_top(EngineState& s, const std::string& id) {
  auto idx = s.index_of(id);
  if (!idx || !s.yard.contains(id) || containers_above(s.yard, id) != 0) return std::nullopt;
  const Category cat = s.classes[*idx].operational_category;
  const PlacementItem item{id, s.yard.segmented() ? segment_for(cat) : SegmentId::None, cat == Category::Cat3};
  const Slot old_slot = s.yard.slot_of(id);
  const auto order = s.pickup_order();

  YardState without = s.yard;
  without.placements.erase(id);
  without.required_segments.erase(id);
  PlacementPlan plan;
  try {
    plan = place_incremental(without, item, order, s.config.objective, false);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
  YardState moved = apply_plan({without, {item}, order, s.config.objective, false}, plan);
  const Slot new_slot = moved.slot_of(id);
  const bool old_allowed = item.segment == SegmentId::None || old_slot.segment == item.segment;
  if (old_allowed) {
    YardState stay = s.yard;
    if (item.segment != SegmentId::None) stay.required_segments[id] = item.segment;
    if (placement_objective(stay, order, s.config.objective) <=
        placement_objective(moved, order, s.config.objective) + 1e-9) {
      s.yard = std::move(stay);
      return std::nullopt;
    }
  }
  s.yard = std::move(moved);
  return Relocation{id, old_slot, new_slot};
}

inline json to_json(const Relocation& r) {
  return {{"container_id", r.container_id}, {"from", to_json(r.from)}, {"to", to_json(r.to)}};
}

inline json yard_json(const EngineState& s) {
  std::vector<std::pair<Slot, std::string>> slots;
  for (const auto& [id, slot] : s.yard.placements) slots.emplace_back(slot, id);
  std::sort(slots.begin(), slots.end());
  json out = json::array();
  for (const auto& [slot, id] : slots) {
    json entry = to_json(slot);
    entry["container_id"] = id;
    if (auto i = s.index_of(id)) {
      const auto& c = s.classes[*i];
      entry["stack_class"] = to_string(c.stack_class);
      entry["category"] = to_string(c.operational_category);
      entry["demurrage"] = c.operational_category == Category::Cat3;
      entry["classification"] = to_json(c);
    }
    out.push_back(std::move(entry));
  }
  json segments = json::array();
  for (auto seg : s.yard.bay_segments) segments.push_back(to_string(seg));
  const auto& l = s.yard.layout;
  return {{"version", s.version},
          {"day", format_date(s.day)},
          {"layout",
           {{"length_bays", l.length_bays},
            {"width_rows", l.width_rows},
            {"max_tier", s.yard.max_tier},
            {"entry_gate", {{"bay", l.entry_gate.bay}, {"row", l.entry_gate.row}}},
            {"exit_gate", {{"bay", l.exit_gate.bay}, {"row", l.exit_gate.row}}}}},
          {"bay_segments", segments},
          {"occupancy", static_cast<int>(s.yard.placements.size())},
          {"slots", out}};
}

inline json schedule_json(const EngineState& s) {
  const auto& p = s.schedule.params;
  json blocks = json::array();
  for (const auto& b : s.schedule.blocks) {
    json visits = json::array();
    for (const auto& v : b.visits)
      visits.push_back({{"container_id", v.container_id},
                        {"carrier_id", v.carrier_id},
                        {"booked_at", v.booked_at},
                        {"origin", to_string(v.origin)}});
    const double dt = departure_time(b.truck_count(), p);
    blocks.push_back({{"index", b.index},
                      {"trucks", b.truck_count()},
                      {"threshold", s.schedule.threshold()},
                      {"departure_time", dt},
                      {"congested", dt > internal_op_time(p)},
                      {"visits", visits}});
  }
  return {{"version", s.version},
          {"day", format_date(s.day)},
          {"threshold", s.schedule.threshold()},
          {"internal_op_time", internal_op_time(p)},
          {"blocks", blocks}};
}

inline json histogram_json(const EngineState& s) {
  json rows = json::array();
  for (const auto& r : histogram(s.ingested, s.schedule))
    rows.push_back({{"block", r.block},
                    {"before", r.demand_before},
                    {"after", r.demand_after},
                    {"delta", r.delta()},
                    {"threshold", r.threshold}});
  return {{"version", s.version}, {"blocks", rows}};
}

/// Live state against the seeded random, unsegmented baseline. PT_hyp is the
/// processing time of a block filled exactly to its serviceable maximum.
inline json metrics_json(const EngineState& s) {
  json j = {{"version", s.version}};
  const auto live = evaluate_day(s.yard, s.schedule, s.pickup_order());
  j["m_optimized"] = live.m;
  j["pt_real"] = live.pt ? json(*live.pt) : json(nullptr);
  j["pt_hyp"] = processing_time(s.schedule.threshold(), s.config.terminal);
  if (s.containers.empty()) {
    j["defined"] = false;
    return j;
  }
  auto base = run_scenario(s.dataset(), Scenario::RandomNoSeg, s.config, s.config.seed);
  j["m_baseline"] = base.m;
  j["pt_baseline"] = base.pt ? json(*base.pt) : json(nullptr);
  if (base.m == 0 || !base.pt || !live.pt) {
    j["defined"] = false;
    return j;
  }
  const double hyp = j["pt_hyp"].get<double>();
  auto report = make_metrics_report(live.m, base.m, hyp, *live.pt, *base.pt);
  j["t_throughput"] = report.t_throughput;
  j["pt_improve"] = report.pt_improve;
  j["defined"] = true;
  return j;
}

// ---------------------------------------------------------------------------
// Threading

/// Runs posted tasks one at a time on its own thread.
class SerialExecutor {
 public:
  SerialExecutor() : thread_([this] { loop(); }) {}
  ~SerialExecutor() {
    {
      std::lock_guard lock(mu_);
      stopping_ = true;
    }
    cv_.notify_all();
    thread_.join();
  }
  SerialExecutor(const SerialExecutor&) = delete;
  SerialExecutor& operator=(const SerialExecutor&) = delete;

  void post(std::function<void()> task) {
    {
      std::lock_guard lock(mu_);
      tasks_.push_back(std::move(task));
    }
    cv_.notify_one();
  }

  template <class F>
  auto call(F&& f) -> decltype(f()) {
    std::packaged_task<decltype(f())()> task(std::forward<F>(f));
    auto fut = task.get_future();
    post([&task] { task(); });
    return fut.get();
  }

 private:
  void loop() {
    for (;;) {
      std::function<void()> task;
      {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return stopping_ || !tasks_.empty(); });
        if (tasks_.empty()) return;
        task = std::move(tasks_.front());
        tasks_.pop_front();
      }
      task();
    }
  }

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::function<void()>> tasks_;
  bool stopping_ = false;
  std::thread thread_;
};

struct Reply {
  int status = 200;
  json body;
};

inline Reply error_reply(int status, std::string_view kind, std::string_view message) {
  return {status, {{"error", kind}, {"message", message}}};
}

// ---------------------------------------------------------------------------
// Service

class Service {
 public:
  explicit Service(EngineConfig config, std::vector<Container> containers = {})
      : snapshot_(std::make_shared<const EngineState>(initial_state(config, std::move(containers)))),
        state_(*snapshot_) {
    routes();
  }

  ~Service() { stop(); }

  std::shared_ptr<const EngineState> snapshot() const {
    std::lock_guard lock(snap_mu_);
    return snapshot_;
  }

  httplib::Server& http() { return server_; }

  /// Binds and serves until stop(); returns false when the port is taken.
  bool listen(const std::string& host, int port) { return server_.listen(host, port); }
  int bind_any(const std::string& host) { return server_.bind_to_any_port(host); }
  bool listen_after_bind() { return server_.listen_after_bind(); }
  void stop() {
    if (server_.is_running()) server_.stop();
  }

  // Commands, callable without HTTP. Each runs on the writer thread.
  Reply register_container(const json& row) { return writer_.call([&] { return do_register(row); }); }
  Reply book(const json& body) { return writer_.call([&] { return do_book(body); }); }
  Reply rebalance() { return writer_.call([&] { return do_rebalance(); }); }
  Reply submit_job(const json& body);
  Reply job(const std::string& id) const;

 private:
  struct Job {
    std::string status = "queued";
    json result;
  };

  void publish() {
    auto snap = std::make_shared<const EngineState>(state_);
    std::lock_guard lock(snap_mu_);
    snapshot_ = std::move(snap);
  }

  static Reply guarded(const std::function<Reply()>& f) {
    try {
      return f();
    } catch (const InfeasibleError& e) {
      return error_reply(422, "infeasible", e.what());
    } catch (const ValidationError& e) {
      return error_reply(400, "validation", e.what());
    } catch (const json::exception& e) {
      return error_reply(400, "validation", e.what());
    }
  }

  Reply do_register(const json& row) {
    return guarded([&]() -> Reply {
      if (!row.is_object()) throw ValidationError("body must be a manifest row object");
      detail::CsvRecord record;
      for (auto column : kManifestColumns) {
        auto it = row.find(std::string(column));
        record.push_back(it == row.end() ? "" : detail::cell(*it));
      }
      Container c = detail::parse_row(record, state_.config.cargo_pickup);
      if (state_.index_of(c.id)) throw ValidationError("container '" + c.id + "' is already registered");

      EngineState next = state_;
      next.containers.push_back(c);
      next.classes = classify_all(next.containers, next.day, next.config.discriminant);
      const Classification cls = next.classes.back();
      if (c.appointment_block) {
        if (*c.appointment_block >= next.schedule.block_count())
          throw ValidationError("appointment_block is outside the operational day");
        next.schedule.book(*c.appointment_block,
                           {c.id, c.carrier_id.value_or(c.owner_id), 0,
                            cls.operational_category == Category::Cat3 ? VisitOrigin::IpsCreated
                                                                        : VisitOrigin::PreExisting,
                            std::nullopt});
      }
      const PlacementItem item{c.id,
                               next.yard.segmented() ? segment_for(cls.operational_category) : SegmentId::None,
                               cls.operational_category == Category::Cat3};
      const auto order = next.pickup_order();
      auto plan = place_incremental(next.yard, item, order, next.config.objective, true);
      next.yard = apply_plan({next.yard, {item}, order, next.config.objective, true}, plan);
      ++next.version;
      state_ = std::move(next);
      publish();

      json relocations = json::array();
      for (const auto& r : plan.relocations) relocations.push_back(to_json(r));
      return {201,
              {{"version", state_.version},
               {"container_id", c.id},
               {"classification", to_json(cls)},
               {"slot", to_json(state_.yard.slot_of(c.id))},
               {"relocations", relocations},
               {"objective_delta", plan.objective}}};
    });
  }

  Reply do_book(const json& body) {
    return guarded([&]() -> Reply {
      if (!body.is_object()) throw ValidationError("body must be an object");
      if (!body.contains("container_id") || !body["container_id"].is_string())
        throw ValidationError("container_id is required");
      if (!body.contains("block") || !body["block"].is_number_integer())
        throw ValidationError("block must be an integer");
      const std::string id = body["container_id"].get<std::string>();
      const int requested = body["block"].get<int>();
      const bool dry_run = body.value("dry_run", false);
      auto idx = state_.index_of(id);
      if (!idx) return error_reply(404, "not_found", "unknown container '" + id + "'");
      if (requested < 0 || requested >= state_.schedule.block_count())
        throw ValidationError("block " + std::to_string(requested) + " is outside the operational day");
      if (!dry_run && body.contains("expected_version")) {
        if (!body["expected_version"].is_number_unsigned())
          throw ValidationError("expected_version must be a non-negative integer");
        if (body["expected_version"].get<std::uint64_t>() != state_.version)
          return error_reply(409, "version_conflict",
                             "state is at version " + std::to_string(state_.version));
      }

      EngineState next = state_;
      const auto& c = next.containers[*idx];
      auto previous = next.schedule.cancel(id);
      TruckVisit visit{id, c.carrier_id.value_or(c.owner_id), 0,
                       previous ? previous->origin : VisitOrigin::PreExisting, std::nullopt};
      int block = requested;
      if (next.schedule.blocks[static_cast<std::size_t>(requested)].truck_count() >= next.schedule.threshold()) {
        const int alt = detail::reinsertion_block(next.schedule, requested, visit);
        if (alt >= 0) block = alt;
      }
      next.schedule.book(block, visit);
      next.containers[*idx].appointment_block = block;
      next.classes = classify_all(next.containers, next.day, next.config.discriminant);
      const auto relocation = replace_on_top(next, id);

      json delta = json::array();
      for (int b = 0; b < next.schedule.block_count(); ++b) {
        const int before = state_.schedule.blocks[static_cast<std::size_t>(b)].truck_count();
        const int after = next.schedule.blocks[static_cast<std::size_t>(b)].truck_count();
        if (before != after) delta.push_back({{"block", b}, {"before", before}, {"after", after}});
      }
      const auto& cls = next.classes[*idx];
      json placement = {{"slot", next.yard.contains(id) ? to_json(next.yard.slot_of(id)) : json(nullptr)},
                        {"classification", to_json(cls)},
                        {"segment", to_string(segment_for(cls.operational_category))},
                        {"demurrage", cls.operational_category == Category::Cat3},
                        {"relocation", relocation ? to_json(*relocation) : json(nullptr)}};
      if (!dry_run) {
        ++next.version;
        state_ = std::move(next);
        publish();
      }
      return {dry_run ? 200 : 201,
              {{"version", state_.version},
               {"dry_run", dry_run},
               {"container_id", id},
               {"requested_block", requested},
               {"block", block},
               {"shifted", block != requested},
               {"schedule_delta", delta},
               {"placement", placement}}};
    });
  }

  Reply do_rebalance() {
    return guarded([&]() -> Reply {
      EngineState next = state_;
      std::vector<CreatedAppointment> created;
      auto result = run_recursive(next.schedule, slack_candidates(next.containers, next.classes, next.schedule),
                                  [&](const CreatedAppointment& a) { created.push_back(a); });
      const bool changed = result.schedule != next.schedule;
      next.schedule = std::move(result.schedule);
      for (auto& c : next.containers)
        if (int b = next.schedule.find(c.id); b >= 0) c.appointment_block = b;
      next.classes = classify_all(next.containers, next.day, next.config.discriminant);

      json appointments = json::array();
      for (const auto& a : created) {
        json entry = {{"container_id", a.container_id}, {"block", a.block}};
        auto relocation = replace_on_top(next, a.container_id);
        entry["relocation"] = relocation ? to_json(*relocation) : json(nullptr);
        if (next.yard.contains(a.container_id)) entry["slot"] = to_json(next.yard.slot_of(a.container_id));
        appointments.push_back(std::move(entry));
      }
      if (changed) {
        ++next.version;
        state_ = std::move(next);
        publish();
      }
      json body = to_json(result.report);
      body["version"] = state_.version;
      body["appointments"] = appointments;
      return {200, body};
    });
  }

  static void send(httplib::Response& res, const Reply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  }

  static std::optional<json> parse_body(const httplib::Request& req, httplib::Response& res) {
    try {
      return json::parse(req.body.empty() ? std::string("{}") : req.body);
    } catch (const json::parse_error& e) {
      send(res, error_reply(400, "validation", std::string("body is not valid JSON: ") + e.what()));
      return std::nullopt;
    }
  }

  void routes() {
    server_.Get("/yard", [this](const httplib::Request&, httplib::Response& res) {
      send(res, {200, yard_json(*snapshot())});
    });
    server_.Get("/schedule", [this](const httplib::Request&, httplib::Response& res) {
      send(res, {200, schedule_json(*snapshot())});
    });
    server_.Get("/histogram", [this](const httplib::Request&, httplib::Response& res) {
      send(res, {200, histogram_json(*snapshot())});
    });
    server_.Get("/metrics", [this](const httplib::Request&, httplib::Response& res) {
      send(res, guarded([&] { return Reply{200, metrics_json(*snapshot())}; }));
    });
    server_.Get(R"(/jobs/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, job(req.matches[1]));
    });
    server_.Post("/containers", [this](const httplib::Request& req, httplib::Response& res) {
      if (auto body = parse_body(req, res)) send(res, register_container(*body));
    });
    server_.Post("/appointments", [this](const httplib::Request& req, httplib::Response& res) {
      if (auto body = parse_body(req, res)) send(res, book(*body));
    });
    server_.Post("/optimize", [this](const httplib::Request& req, httplib::Response& res) {
      if (auto body = parse_body(req, res)) send(res, submit_job(*body));
    });
    server_.Post("/rebalance", [this](const httplib::Request&, httplib::Response& res) {
      send(res, rebalance());
    });
    server_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        json body = {{"error", res.status == 404 ? "not_found" : "error"},
                     {"message", httplib::status_message(res.status)}};
        res.set_content(body.dump(), "application/json");
      }
    });
  }

  mutable std::mutex snap_mu_;
  std::shared_ptr<const EngineState> snapshot_;
  EngineState state_;  // writer thread only

  mutable std::mutex jobs_mu_;
  std::map<std::string, Job> jobs_;
  std::uint64_t next_job_ = 1;

  httplib::Server server_;
  SerialExecutor writer_;
  SerialExecutor runner_;  // declared last: joined first, while jobs_ is alive
};

inline Reply Service::submit_job(const json& body) {
  return guarded([&]() -> Reply {
    if (!body.is_object()) throw ValidationError("body must be an object");
    if (!body.contains("scenario") || !body["scenario"].is_number_integer())
      throw ValidationError("scenario must be 1, 2, 3 or 4");
    const Scenario scenario = scenario_from_number(body["scenario"].get<int>());
    auto snap = snapshot();
    std::uint64_t seed = snap->config.seed;
    if (body.contains("seed")) {
      if (!body["seed"].is_number_unsigned()) throw ValidationError("seed must be a non-negative integer");
      seed = body["seed"].get<std::uint64_t>();
    }
    if (snap->containers.empty()) throw ValidationError("no containers loaded");
    std::string id;
    {
      std::lock_guard lock(jobs_mu_);
      id = "job-" + std::to_string(next_job_++);
      jobs_[id] = Job{};
    }
    runner_.post([this, id, snap, scenario, seed] {
      {
        std::lock_guard lock(jobs_mu_);
        jobs_[id].status = "running";
      }
      Job done;
      try {
        done.result = to_json(run_scenario(snap->dataset(), scenario, snap->config, seed));
        done.result["version"] = snap->version;
        done.status = "done";
      } catch (const std::exception& e) {
        done.status = "failed";
        done.result = {{"error", dynamic_cast<const InfeasibleError*>(&e) ? "infeasible" : "validation"},
                       {"message", e.what()}};
      }
      std::lock_guard lock(jobs_mu_);
      jobs_[id] = std::move(done);
    });
    return {202, {{"job_id", id}, {"status", "queued"}, {"version", snap->version}}};
  });
}

inline Reply Service::job(const std::string& id) const {
  std::lock_guard lock(jobs_mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return error_reply(404, "not_found", "unknown job '" + id + "'");
  json body = {{"job_id", id}, {"status", it->second.status}};
  if (!it->second.result.is_null()) body["result"] = it->second.result;
  return {200, body};
}

}  // namespace ips
