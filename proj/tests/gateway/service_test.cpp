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


#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "ips/cli.hpp"
#include "ips/service.hpp"
#include "support/fixture.hpp"

namespace ips {
namespace {

using nlohmann::json;

// A service listening on an ephemeral loopback port.
class Running {
 public:
  explicit Running(EngineConfig config, std::vector<Container> containers = {})
      : service_(std::move(config), std::move(containers)) {
    port_ = service_.bind_any("127.0.0.1");
    thread_ = std::thread([this] { service_.listen_after_bind(); });
    service_.http().wait_until_ready();
  }
  ~Running() {
    service_.stop();
    thread_.join();
  }

  Service& service() { return service_; }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(30, 0);
    return c;
  }

  json get(const std::string& path, int expect = 200) const {
    auto res = client().Get(path);
    EXPECT_TRUE(res) << path;
    if (!res) return nullptr;
    EXPECT_EQ(res->status, expect) << path << " " << res->body;
    return json::parse(res->body);
  }

  std::pair<int, json> post(const std::string& path, const std::string& body) const {
    auto res = client().Post(path, body, "application/json");
    EXPECT_TRUE(res) << path;
    if (!res) return {0, nullptr};
    return {res->status, json::parse(res->body)};
  }

 private:
  Service service_;
  int port_ = 0;
  std::thread thread_;
};

json new_row(const std::string& id, std::optional<int> block = std::nullopt) {
  return {{"container_id", id},      {"arrival_date", "2026-03-16"},
          {"free_days", 5},          {"weight_tons", 20.0},
          {"cargo_type", "general"}, {"pickup_probability", 0.5},
          {"consignee_id", "CN"},    {"carrier_id", "CR"},
          {"carrier_visits_per_month", 4}, {"owner_id", "OW"},
          {"appointment_block", block ? json(*block) : json(nullptr)}, {"destination", "X"}};
}

EngineConfig fixture_config() { return testing::load_fixture().config; }

std::vector<Container> fixture_containers() { return testing::load_fixture().data.containers; }

TEST(Service, EmptyStateStartsAtVersionZero) {
  Running svc(fixture_config());
  auto yard = svc.get("/yard");
  EXPECT_EQ(yard["version"], 0);
  EXPECT_EQ(yard["occupancy"], 0);
  EXPECT_EQ(yard["layout"]["length_bays"], 8);
  EXPECT_EQ(yard["bay_segments"].size(), 8u);
  auto schedule = svc.get("/schedule");
  EXPECT_EQ(schedule["blocks"].size(), 9u);
  EXPECT_EQ(schedule["threshold"], 6);
  auto metrics = svc.get("/metrics");
  EXPECT_EQ(metrics["defined"], false);
  EXPECT_EQ(metrics["m_optimized"], 0);
}

TEST(Service, RegisteredContainerGetsTheIncrementalSlot) {
  Running svc(fixture_config(), fixture_containers());
  auto before = svc.service().snapshot();
  const auto row = new_row("IPSU9990001");

  // Expected slot straight from place_incremental on the published yard.
  auto containers = before->containers;
  containers.push_back(detail::parse_row(
      [&] {
        detail::CsvRecord r;
        for (auto col : kManifestColumns) r.push_back(detail::cell(row[std::string(col)]));
        return r;
      }(),
      before->config.cargo_pickup));
  auto classes = classify_all(containers, before->day, before->config.discriminant);
  const auto cat = classes.back().operational_category;
  const PlacementItem item{"IPSU9990001", segment_for(cat), cat == Category::Cat3};
  auto order = PickupOrder::from_infos(pickup_infos(containers, classes, before->schedule));
  auto plan = place_incremental(before->yard, item, order, before->config.objective, true);

  auto [status, body] = svc.post("/containers", row.dump());
  ASSERT_EQ(status, 201) << body;
  EXPECT_EQ(body["version"], 1);
  EXPECT_EQ(body["slot"], to_json(plan.assignment.at("IPSU9990001")));
  EXPECT_EQ(body["relocations"].size(), plan.relocations.size());
  EXPECT_EQ(body["classification"]["category"], to_string(cat));

  auto yard = svc.get("/yard");
  EXPECT_EQ(yard["version"], 1);
  EXPECT_EQ(yard["occupancy"], 64);

  auto [dup_status, dup] = svc.post("/containers", row.dump());
  EXPECT_EQ(dup_status, 400);
  EXPECT_EQ(dup["error"], "validation");
  auto bad = new_row("IPSU9990002");
  bad["pickup_probability"] = 1.5;
  EXPECT_EQ(svc.post("/containers", bad.dump()).first, 400);
  EXPECT_EQ(svc.post("/containers", "{not json").first, 400);
  EXPECT_EQ(svc.get("/yard")["version"], 1);
}

TEST(Service, BookingShiftsOutOfAFullBlockAndDryRunsChangeNothing) {
  Running svc(fixture_config(), fixture_containers());
  auto snap = svc.service().snapshot();
  const int limit = snap->schedule.threshold();
  ASSERT_GE(snap->schedule.blocks[0].truck_count(), limit);
  int expected_block = -1;
  for (int b = 1; b < snap->schedule.block_count() && expected_block < 0; ++b)
    if (snap->schedule.blocks[static_cast<std::size_t>(b)].truck_count() < limit) expected_block = b;
  ASSERT_GE(expected_block, 0);
  std::string unbooked;
  for (std::size_t i = 0; i < snap->containers.size() && unbooked.empty(); ++i)
    if (snap->schedule.find(snap->containers[i].id) < 0 && snap->classes[i].operational_category == Category::Cat2)
      unbooked = snap->containers[i].id;
  ASSERT_FALSE(unbooked.empty());

  const json request = {{"container_id", unbooked}, {"block", 0}, {"dry_run", true}};
  auto [dry_status, dry] = svc.post("/appointments", request.dump());
  ASSERT_EQ(dry_status, 200) << dry;
  EXPECT_EQ(dry["shifted"], true);
  EXPECT_EQ(dry["block"], expected_block);
  EXPECT_EQ(dry["version"], 0);
  EXPECT_EQ(dry["schedule_delta"].size(), 1u);
  EXPECT_EQ(dry["placement"]["segment"], "S1");
  EXPECT_EQ(svc.get("/yard")["version"], 0);
  auto after_dry = svc.service().snapshot();
  EXPECT_EQ(yard_json(*after_dry), yard_json(*snap));
  EXPECT_EQ(schedule_json(*after_dry), schedule_json(*snap));

  json commit = request;
  commit["dry_run"] = false;
  commit["expected_version"] = 0;
  auto [ok_status, ok] = svc.post("/appointments", commit.dump());
  ASSERT_EQ(ok_status, 201) << ok;
  EXPECT_EQ(ok["version"], 1);
  EXPECT_EQ(ok["block"], expected_block);
  auto schedule = svc.get("/schedule");
  EXPECT_EQ(schedule["blocks"][static_cast<std::size_t>(expected_block)]["trucks"],
            snap->schedule.blocks[static_cast<std::size_t>(expected_block)].truck_count() + 1);

  auto [stale_status, stale] = svc.post("/appointments", commit.dump());
  EXPECT_EQ(stale_status, 409);
  EXPECT_EQ(stale["error"], "version_conflict");

  EXPECT_EQ(svc.post("/appointments", json({{"container_id", "NOPE"}, {"block", 1}}).dump()).first, 404);
  EXPECT_EQ(svc.post("/appointments", json({{"container_id", unbooked}, {"block", 99}}).dump()).first, 400);
  EXPECT_EQ(svc.post("/appointments", json({{"block", 1}}).dump()).first, 400);
}

TEST(Service, RebalanceClearsCongestionAndFeedsTheHistogram) {
  Running svc(fixture_config(), fixture_containers());
  auto [status, body] = svc.post("/rebalance", "");
  ASSERT_EQ(status, 200) << body;
  EXPECT_EQ(body["converged"], true);
  EXPECT_EQ(body["version"], 1);
  EXPECT_EQ(body["appointments"].size(), body["created"].size());
  auto schedule = svc.get("/schedule");
  for (const auto& b : schedule["blocks"]) {
    EXPECT_EQ(b["congested"], false);
    EXPECT_LE(b["trucks"].get<int>(), 6);
  }
  auto hist = svc.get("/histogram");
  int delta = 0;
  for (const auto& row : hist["blocks"]) delta += row["delta"].get<int>();
  EXPECT_EQ(delta, static_cast<int>(body["created"].size()));
  EXPECT_TRUE(validate_yard(svc.service().snapshot()->yard).empty());

  // Already balanced: a second pass changes nothing.
  auto [again_status, again] = svc.post("/rebalance", "");
  EXPECT_EQ(again_status, 200);
  EXPECT_EQ(again["version"], 1);
  EXPECT_TRUE(again["created"].empty());
}

TEST(Service, OptimizeJobMatchesTheCli) {
  Running svc(fixture_config(), fixture_containers());
  auto [status, body] = svc.post("/optimize", R"({"scenario": 4, "seed": 7})");
  ASSERT_EQ(status, 202) << body;
  const std::string id = body["job_id"];
  json job;
  for (int i = 0; i < 600; ++i) {
    job = svc.get("/jobs/" + id);
    if (job["status"] == "done" || job["status"] == "failed") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  ASSERT_EQ(job["status"], "done") << job;

  std::ostringstream out, err;
  ASSERT_EQ(run_cli({"--config", testing::source_path("data/fixture.json"), "optimize", "--scenario", "4",
                     "--seed", "7"},
                    out, err),
            kExitOk);
  EXPECT_EQ(job["result"]["report"], out.str());

  EXPECT_EQ(svc.post("/optimize", R"({"scenario": 9})").first, 400);
  EXPECT_EQ(svc.post("/optimize", R"({"scenario": 1, "seed": -1})").first, 400);
  svc.get("/jobs/job-999", 404);
}

TEST(Service, MetricsAgainstTheRandomBaseline) {
  Running svc(fixture_config(), fixture_containers());
  auto m = svc.get("/metrics");
  EXPECT_EQ(m["defined"], true);
  EXPECT_EQ(m["m_baseline"], 24);
  EXPECT_EQ(m["m_optimized"], 24);
  EXPECT_DOUBLE_EQ(m["pt_hyp"].get<double>(), 60.0);
  EXPECT_DOUBLE_EQ(m["t_throughput"].get<double>(), 0.0);
}

TEST(Service, UnknownRoutesAreJsonNotFound) {
  Running svc(fixture_config());
  auto body = svc.get("/nowhere", 404);
  EXPECT_EQ(body["error"], "not_found");
  EXPECT_EQ(svc.post("/optimize", "{}").first, 400);
  EXPECT_EQ(svc.post("/optimize", R"({"scenario": 3})").first, 400);  // nothing loaded yet
}

// Readers only ever see whole states: on an initially empty yard every
// published version holds exactly that many containers.
TEST(Service, ConcurrentReadersSeeConsistentSnapshots) {
  Running svc(fixture_config());
  std::atomic<bool> done{false};
  std::atomic<int> mismatches{0}, reads{0};
  std::vector<std::thread> readers;
  for (int t = 0; t < 3; ++t)
    readers.emplace_back([&] {
      auto client = svc.client();
      long last = -1;
      while (!done) {
        auto res = client.Get("/yard");
        if (!res || res->status != 200) {
          ++mismatches;
          continue;
        }
        auto j = json::parse(res->body);
        const long v = j["version"].get<long>();
        if (v < last || j["occupancy"].get<long>() != v) ++mismatches;
        last = v;
        ++reads;
      }
    });
  for (int i = 0; i < 8; ++i)
    EXPECT_EQ(svc.post("/containers", new_row("IPSU88800" + std::to_string(i)).dump()).first, 201);
  done = true;
  for (auto& r : readers) r.join();
  EXPECT_EQ(mismatches, 0);
  EXPECT_GT(reads, 0);
  EXPECT_EQ(svc.get("/yard")["version"], 8);
}

}  // namespace
}  // namespace ips
