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

#include <random>

#include <gtest/gtest.h>

#include "ips/model.hpp"
#include "ips/solver.hpp"
#include "ips/yard.hpp"

namespace ips {
namespace {

YardState small_yard(int bays = 2, int rows = 2, int tiers = 4) {
  return YardState(YardLayout{bays, rows, {0, 0}, {bays, 0}, 0}, tiers);
}

TEST(Dates, ParsesAndFormatsIsoDates) {
  const Date d = parse_date("2024-02-29");
  EXPECT_EQ(format_date(d), "2024-02-29");
  EXPECT_EQ(days_between(parse_date("2024-01-01"), parse_date("2024-01-04")), 3);
  EXPECT_EQ(days_between(parse_date("2024-02-27"), parse_date("2024-03-02")), 4);
  EXPECT_EQ(days_between(parse_date("2024-03-02"), parse_date("2024-02-27")), -4);
}

TEST(Dates, RejectsMalformedDates) {
  for (const char* bad : {"", "2024-1-01", "2023-02-29", "2024-13-01", "2024/01/01", "20x4-01-01",
                          "2024-01-01T00"})
    EXPECT_THROW(parse_date(bad), ValidationError) << bad;
}

TEST(ContainerValidation, EnforcesFieldRanges) {
  Container c{"A", parse_date("2024-01-01"), 5, 10.0, "general", 0.5, "C", std::nullopt, 2, "O",
              std::nullopt, "X"};
  EXPECT_NO_THROW(validate(c));
  auto bad = c;
  bad.weight_tons = 0.0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = c;
  bad.pickup_probability = 1.5;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = c;
  bad.free_days = -1;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = c;
  bad.carrier_visits_per_month = -1;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = c;
  bad.id.clear();
  EXPECT_THROW(validate(bad), ValidationError);
}

TEST(LayoutValidation, GatesMustDifferAndCapacityMustCoverCensus) {
  EXPECT_NO_THROW(validate(YardLayout{2, 2, {0, 0}, {2, 0}, 16}, 4));
  EXPECT_THROW(validate(YardLayout{2, 2, {0, 0}, {2, 0}, 17}, 4), ValidationError);
  EXPECT_THROW(validate(YardLayout{2, 2, {1, 1}, {1, 1}, 0}, 4), ValidationError);
  EXPECT_THROW(validate(YardLayout{0, 2, {0, 0}, {2, 0}, 0}, 4), ValidationError);
}

TEST(ContainersAbove, CountsOccupiedTiersOverTheContainer) {
  auto yard = small_yard();
  yard.push("a", 0, 0);
  yard.push("b", 0, 0);
  yard.push("c", 0, 0);
  EXPECT_EQ(containers_above(yard, "a"), 2);
  EXPECT_EQ(containers_above(yard, "c"), 0);

  auto four = small_yard();
  for (const char* id : {"t0", "t1", "t2", "t3"}) four.push(id, 1, 1);
  EXPECT_EQ(containers_above(four, "t1"), 2);
  EXPECT_THROW(containers_above(four, "missing"), ValidationError);
}

TEST(ValidateYard, EmptyYardIsValid) { EXPECT_TRUE(validate_yard(small_yard()).empty()); }

TEST(ValidateYard, ReportsFloatingContainer) {
  auto yard = small_yard();
  yard.placements["x"] = Slot{0, 0, 1, SegmentId::None};
  auto v = validate_yard(yard);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::Gravity);
}

TEST(ValidateYard, ReportsDuplicateSlot) {
  auto yard = small_yard();
  yard.placements["x"] = Slot{0, 0, 0, SegmentId::None};
  yard.placements["y"] = Slot{0, 0, 0, SegmentId::None};
  auto v = validate_yard(yard);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.kind == ViolationKind::DuplicateSlot; }));
}

TEST(ValidateYard, ReportsTierBoundOutOfBoundsAndSegmentMismatch) {
  auto yard = small_yard(3, 1, 2);
  yard.bay_segments = {SegmentId::S3, SegmentId::S2, SegmentId::S1};
  yard.push("a", 0, 0);
  yard.push("b", 0, 0);
  yard.placements["c"] = Slot{0, 0, 2, SegmentId::S3};
  yard.placements["d"] = Slot{5, 0, 0, SegmentId::None};
  yard.push("e", 1, 0);
  yard.required_segments["e"] = SegmentId::S1;
  auto v = validate_yard(yard);
  auto has = [&](ViolationKind k) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
  };
  EXPECT_TRUE(has(ViolationKind::TierBound));
  EXPECT_TRUE(has(ViolationKind::OutOfBounds));
  EXPECT_TRUE(has(ViolationKind::SegmentMismatch));
}

// Random gravity-valid yards: validation is clean and repeatable, every
// above-count is below the tier limit, and stack heights add up to the census.
TEST(YardProperties, RandomStackingsAreValid) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto yard = small_yard(3, 3, 3);
    std::vector<PlacementItem> items;
    const int n = static_cast<int>(rng() % 27);
    for (int i = 0; i < n; ++i) items.push_back({"c" + std::to_string(i), SegmentId::None, false});
    yard = random_placement(yard, items, rng());
    EXPECT_TRUE(validate_yard(yard).empty());
    EXPECT_EQ(validate_yard(yard), validate_yard(yard));
    int sum = 0;
    for (int b = 0; b < 3; ++b)
      for (int r = 0; r < 3; ++r) sum += yard.stack_height(b, r);
    EXPECT_EQ(sum, n);
    for (const auto& [id, slot] : yard.placements) {
      EXPECT_GE(containers_above(yard, id), 0);
      EXPECT_LT(containers_above(yard, id), yard.max_tier);
    }
  }
}

}  // namespace
}  // namespace ips
