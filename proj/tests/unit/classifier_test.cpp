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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ips/classifier.hpp"

namespace ips {
namespace {

Container box(int free_days, const char* arrival, std::optional<int> block = std::nullopt, int visits = 6) {
  return {"BOX1", parse_date(arrival), free_days, 20.0, "general", 0.8, "CN", std::string("CR"), visits,
          "OW", block, "Dallas"};
}

// Scores written out term by term, independent of DiscriminantFunction.
DiscriminantScores hand_scores(double cons, double cargo) {
  return {-0.985 + 0.032 * cons + 1.281 * cargo, -13.239 + 0.116 * cons + 4.698 * cargo,
          -37.387 + 0.344 * cons + 7.688 * cargo};
}

void expect_rel(double got, double want, double tol = 1e-9) {
  EXPECT_LE(std::abs(got - want), tol * std::max(1.0, std::abs(want))) << got << " vs " << want;
}

TEST(DiscriminantScores, InterceptsAtOrigin) {
  auto s = discriminant_scores(0, 0);
  expect_rel(s[0], -0.985);
  expect_rel(s[1], -13.239);
  expect_rel(s[2], -37.387);
}

TEST(DiscriminantScores, AnchorPointsMatchHandArithmetic) {
  // (10,1): -0.985+0.32+1.281, -13.239+1.16+4.698, -37.387+3.44+7.688
  auto a = discriminant_scores(10, 1);
  expect_rel(a[0], 0.616);
  expect_rel(a[1], -7.381);
  expect_rel(a[2], -26.259);
  auto b = discriminant_scores(100, 5);
  expect_rel(b[0], 8.620);
  expect_rel(b[1], 21.851);
  expect_rel(b[2], 35.453);
}

TEST(StackClass, ArgmaxWithLowerClassWinningTies) {
  EXPECT_EQ(stack_class_of(discriminant_scores(0, 0)), StackClass::C1);
  EXPECT_EQ(stack_class_of(discriminant_scores(10, 1)), StackClass::C1);
  EXPECT_EQ(stack_class_of(discriminant_scores(100, 5)), StackClass::C3);
  EXPECT_EQ(stack_class_of({1.0, 1.0, 0.0}), StackClass::C1);
  EXPECT_EQ(stack_class_of({0.0, 2.0, 2.0}), StackClass::C2);
  EXPECT_EQ(stack_class_of({3.0, 3.0, 3.0}), StackClass::C1);
}

TEST(CargoVariable, ProductWithZeroFreeDaysClampedToOne) {
  expect_rel(cargo_variable(20, 0.8, 5), 80.0);
  expect_rel(cargo_variable(20, 0.8, 0), 16.0);
  EXPECT_EQ(cargo_variable(33, 0.0, 4), 0.0);
  EXPECT_THROW(cargo_variable(0.0, 0.5, 3), ValidationError);
  EXPECT_THROW(cargo_variable(-1.0, 0.5, 3), ValidationError);
}

TEST(DaysPassed, CalendarSubtraction) {
  auto c = box(5, "2024-01-01");
  EXPECT_EQ(days_passed(c, parse_date("2024-01-01")), 0);
  EXPECT_EQ(days_passed(c, parse_date("2024-01-04")), 3);
  auto leap = box(5, "2024-02-27");
  EXPECT_EQ(days_passed(leap, parse_date("2024-03-02")), 4);
  EXPECT_THROW(days_passed(c, parse_date("2023-12-31")), ValidationError);
}

TEST(RemainingFreeDays, SignedDifference) {
  EXPECT_EQ(remaining_free_days(box(5, "2024-01-01"), parse_date("2024-01-03")), 3);
  EXPECT_EQ(remaining_free_days(box(5, "2024-01-01"), parse_date("2024-01-06")), 0);
  EXPECT_EQ(remaining_free_days(box(3, "2024-01-01"), parse_date("2024-01-08")), -4);
}

TEST(ConsigneeVariable, CarrierVisitsWhenBooked) {
  // d_f = 5, two days passed, 6 carrier visits: (3/5)/6.
  auto c = box(5, "2024-01-01", 2, 6);
  EXPECT_DOUBLE_EQ(consignee_variable(c, parse_date("2024-01-03"), 99), 0.1);
}

TEST(ConsigneeVariable, OwnerCensusWhenUnbooked) {
  auto c = box(4, "2024-01-01");
  EXPECT_DOUBLE_EQ(consignee_variable(c, parse_date("2024-01-03"), 10), 0.05);
}

TEST(ConsigneeVariable, ClampsKeepValuesFiniteAndNonNegative) {
  const Date day = parse_date("2024-01-10");
  auto zero_free = box(0, "2024-01-10", 1, 6);
  auto zero_visits = box(5, "2024-01-08", 1, 0);
  auto late = box(3, "2024-01-01", 1, 6);
  for (const auto& c : {zero_free, zero_visits, late}) {
    const double v = consignee_variable(c, day, 0);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GE(v, 0.0);
  }
  EXPECT_EQ(consignee_variable(late, day, 0), 0.0);
  // No carrier visits on record falls back to the owner census, itself floored at one.
  EXPECT_DOUBLE_EQ(consignee_variable(zero_visits, day, 0), 3.0 / 5.0);
}

TEST(OwnerCensus, SameOwnerUnbookedSameMonthOnly) {
  std::vector<Container> m{box(5, "2024-03-02"), box(5, "2024-03-20", 1), box(5, "2024-02-28"),
                           box(5, "2024-03-05")};
  m[3].owner_id = "OTHER";
  EXPECT_EQ(owner_census(m, "OW", parse_date("2024-03-21")), 1);
  EXPECT_EQ(owner_census(m, "OTHER", parse_date("2024-03-21")), 1);
  EXPECT_EQ(owner_census(m, "NOBODY", parse_date("2024-03-21")), 0);
}

TEST(OperationalCategory, BookingAndDemurrage) {
  const Date day = parse_date("2024-01-03");
  EXPECT_EQ(operational_category(box(5, "2024-01-01", 3), day), Category::Cat1);
  EXPECT_EQ(operational_category(box(5, "2024-01-01"), day), Category::Cat2);
  EXPECT_EQ(operational_category(box(0, "2024-01-01"), day), Category::Cat3);
  EXPECT_EQ(operational_category(box(2, "2024-01-01", 4), day), Category::Cat3);
}

TEST(Classify, RecordsEveryIntermediateValue) {
  auto c = box(5, "2024-01-01", 2, 6);
  auto r = classify(c, parse_date("2024-01-03"), 4);
  EXPECT_EQ(r.remaining_free_days, 3);
  expect_rel(r.cargo_value, 20 * 0.8 * 3);
  expect_rel(r.consignee_value, 0.1);
  auto want = hand_scores(0.1, 48.0);
  for (int k = 0; k < 3; ++k) expect_rel(r.scores[static_cast<std::size_t>(k)], want[static_cast<std::size_t>(k)]);
  EXPECT_EQ(r.stack_class, StackClass::C3);
  EXPECT_EQ(r.operational_category, Category::Cat1);
}

TEST(Classify, CoefficientOverridesAreHonoured) {
  DiscriminantCoefficients flat;
  flat.classes = {{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}};
  auto r = classify(box(5, "2024-01-01"), parse_date("2024-01-02"), 1, flat);
  EXPECT_EQ(r.stack_class, StackClass::C2);
}

// Randomised checks over the input space.
TEST(ClassifierProperties, ScoresMatchHandFormulaAndArgmax) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cons(0.0, 5.0), cargo(0.0, 300.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = cons(rng), b = cargo(rng);
    auto s = discriminant_scores(a, b);
    auto h = hand_scores(a, b);
    for (int k = 0; k < 3; ++k) expect_rel(s[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k)]);
    const auto cls = stack_class_of(s);
    for (int k = 0; k < 3; ++k) EXPECT_GE(s[static_cast<std::size_t>(cls)], s[static_cast<std::size_t>(k)]);
  }
}

TEST(ClassifierProperties, C3MarginGrowsWithCargoValue) {
  for (double cons : {0.0, 0.5, 3.0}) {
    double prev = -1e300;
    for (double cargo = 0; cargo < 50; cargo += 0.25) {
      auto s = discriminant_scores(cons, cargo);
      EXPECT_GT(s[2] - s[0], prev);
      prev = s[2] - s[0];
    }
    EXPECT_EQ(stack_class_of(discriminant_scores(cons, 1e6)), StackClass::C3);
  }
}

TEST(ClassifierProperties, ClassifyIsPureAndOrderIndependent) {
  std::mt19937_64 rng(5);
  std::vector<Container> manifest;
  const Date day = parse_date("2024-05-20");
  for (int i = 0; i < 60; ++i) {
    Container c = box(static_cast<int>(rng() % 8), "2024-05-01");
    c.id = "C" + std::to_string(i);
    c.arrival_date = Date{std::chrono::sys_days{day} - std::chrono::days{static_cast<int>(rng() % 12)}};
    c.weight_tons = 1.0 + static_cast<double>(rng() % 300) / 10.0;
    c.pickup_probability = static_cast<double>(rng() % 101) / 100.0;
    c.owner_id = "O" + std::to_string(rng() % 5);
    if (rng() % 2) c.appointment_block = static_cast<int>(rng() % 9);
    c.carrier_visits_per_month = static_cast<int>(rng() % 10);
    manifest.push_back(c);
  }
  auto first = classify_all(manifest, day);
  EXPECT_EQ(first, classify_all(manifest, day));
  auto shuffled = manifest;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto second = classify_all(shuffled, day);
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    auto it = std::find_if(manifest.begin(), manifest.end(), [&](const Container& c) { return c.id == shuffled[i].id; });
    EXPECT_EQ(second[i], first[static_cast<std::size_t>(it - manifest.begin())]);
  }
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    EXPECT_GE(first[i].consignee_value, 0.0);
    EXPECT_EQ(first[i].consignee_value == 0.0, first[i].remaining_free_days <= 0);
  }
}

}  // namespace
}  // namespace ips
