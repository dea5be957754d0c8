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

// Z-score classification of import containers.
//
// Each container gets a cargo value and a consignee value, which feed three
// linear discriminant functions (one per stacking class). The class with the
// highest score wins. Independently, free-day status and appointment status
// put the container into one of three operational categories, which decide
// the yard segment it lives in.

#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

#include "ips/model.hpp"

namespace ips {

struct DiscriminantFunction {
  double intercept = 0.0;
  double consignee_weight = 0.0;
  double cargo_weight = 0.0;

  double operator()(double consignee_value, double cargo_value) const {
    return intercept + consignee_weight * consignee_value + cargo_weight * cargo_value;
  }
  bool operator==(const DiscriminantFunction&) const = default;
};

struct DiscriminantCoefficients {
  std::array<DiscriminantFunction, 3> classes{{
      {-0.985, 0.032, 1.281},
      {-13.239, 0.116, 4.698},
      {-37.387, 0.344, 7.688},
  }};

  const DiscriminantFunction& operator[](StackClass c) const {
    return classes[static_cast<std::size_t>(c)];
  }
  bool operator==(const DiscriminantCoefficients&) const = default;
};

using DiscriminantScores = std::array<double, 3>;

struct Classification {
  double cargo_value = 0.0;
  double consignee_value = 0.0;
  DiscriminantScores scores{};
  StackClass stack_class = StackClass::C1;
  Category operational_category = Category::Cat2;
  int remaining_free_days = 0;

  bool operator==(const Classification&) const = default;
};

/// w_c * p_c * d_f with d_f clamped to at least one day.
inline double cargo_variable(double weight_tons, double pickup_probability, int free_days) {
  if (!(weight_tons > 0.0)) throw ValidationError("cargo weight must be positive");
  return weight_tons * pickup_probability * static_cast<double>(std::max(free_days, 1));
}

/// Cargo value on the container's granted free days.
inline double cargo_variable(const Container& c) {
  return cargo_variable(c.weight_tons, c.pickup_probability, c.free_days);
}

inline int days_passed(const Container& c, Date current) {
  int d = days_between(c.arrival_date, current);
  if (d < 0)
    throw ValidationError("current date " + format_date(current) + " precedes arrival of '" +
                          c.id + "'");
  return d;
}

/// Free days left; negative once the container is in demurrage.
inline int remaining_free_days(const Container& c, Date current) {
  return c.free_days - days_passed(c, current);
}

/// Cargo value on the free days still remaining at `current` (clamped to 1).
inline double cargo_variable(const Container& c, Date current) {
  return cargo_variable(c.weight_tons, c.pickup_probability, remaining_free_days(c, current));
}

/// Same-owner containers without an appointment arriving in the calendar
/// month of `current`.
inline int owner_census(std::span<const Container> manifest, const std::string& owner_id,
                        Date current) {
  return static_cast<int>(std::count_if(manifest.begin(), manifest.end(), [&](const Container& c) {
    return c.owner_id == owner_id && !c.appointment_block &&
           c.arrival_date.year() == current.year() && c.arrival_date.month() == current.month();
  }));
}

inline double consignee_variable(const Container& c, Date current, int owner_count) {
  const double granted = std::max(c.free_days, 1);
  const double remaining = std::max(remaining_free_days(c, current), 0);
  const bool by_carrier = c.appointment_block.has_value() && c.carrier_visits_per_month >= 1;
  const double visits = by_carrier ? c.carrier_visits_per_month : std::max(owner_count, 1);
  // Single division of exact integers, so results like 3/30 round once.
  return remaining / (granted * visits);
}

inline DiscriminantScores discriminant_scores(double consignee_value, double cargo_value,
                                              const DiscriminantCoefficients& coeffs = {}) {
  return {coeffs.classes[0](consignee_value, cargo_value),
          coeffs.classes[1](consignee_value, cargo_value),
          coeffs.classes[2](consignee_value, cargo_value)};
}

/// Argmax; ties go to the lower class.
inline StackClass stack_class_of(const DiscriminantScores& s) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] > s[best]) best = k;
  return static_cast<StackClass>(best);
}

/// Cat1/Cat2 split on appointment status while free days remain; anything in
/// demurrage is Cat3, booked or not.
inline Category operational_category(const Container& c, Date current) {
  if (remaining_free_days(c, current) <= 0) return Category::Cat3;
  return c.appointment_block ? Category::Cat1 : Category::Cat2;
}

inline Classification classify(const Container& c, Date current, int owner_count,
                               const DiscriminantCoefficients& coeffs = {}) {
  Classification out;
  out.remaining_free_days = remaining_free_days(c, current);
  out.cargo_value = cargo_variable(c, current);
  out.consignee_value = consignee_variable(c, current, owner_count);
  out.scores = discriminant_scores(out.consignee_value, out.cargo_value, coeffs);
  out.stack_class = stack_class_of(out.scores);
  out.operational_category = operational_category(c, current);
  return out;
}

/// Classifies a whole manifest, computing each owner census from it.
inline std::vector<Classification> classify_all(std::span<const Container> manifest, Date current,
                                                const DiscriminantCoefficients& coeffs = {}) {
  std::vector<Classification> out;
  out.reserve(manifest.size());
  for (const auto& c : manifest)
    out.push_back(classify(c, current, owner_census(manifest, c.owner_id, current), coeffs));
  return out;
}

}  // namespace ips
