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

// Domain types shared by every part of the planner: containers, terminal
// parameters, yard geometry and gate appointments.

#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ips {

using Date = std::chrono::year_month_day;

/// Input that breaks a documented precondition (bad manifest field, bad id).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but cannot be satisfied (capacity shortfall).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a strict ISO 8601 calendar date (YYYY-MM-DD).
inline Date parse_date(std::string_view text) {
  auto fail = [&] { return ValidationError("invalid date '" + std::string(text) + "'"); };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw fail();
  auto field = [&](std::size_t pos, std::size_t len) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, value);
    if (ec != std::errc{} || ptr != text.data() + pos + len) throw fail();
    return value;
  };
  Date date{std::chrono::year{field(0, 4)}, std::chrono::month{static_cast<unsigned>(field(5, 2))},
            std::chrono::day{static_cast<unsigned>(field(8, 2))}};
  if (!date.ok()) throw fail();
  return date;
}

inline std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

/// Whole calendar days from `from` to `to` (negative when `to` is earlier).
inline int days_between(Date from, Date to) {
  return static_cast<int>((std::chrono::sys_days{to} - std::chrono::sys_days{from}).count());
}

/// Discriminant stacking class; C3 containers are expected to leave first.
enum class StackClass : std::uint8_t { C1, C2, C3 };

/// Operational category used for yard segmentation.
///   Cat1: inside free days, pickup appointment booked.
///   Cat2: inside free days, no appointment.
///   Cat3: in demurrage.
enum class Category : std::uint8_t { Cat1, Cat2, Cat3 };

enum class SegmentId : std::uint8_t { None, S1, S2, S3 };

enum class VisitOrigin : std::uint8_t { PreExisting, IpsCreated };

inline std::string_view to_string(StackClass c) {
  switch (c) {
    case StackClass::C1: return "C1";
    case StackClass::C2: return "C2";
    case StackClass::C3: return "C3";
  }
  return "?";
}

inline std::string_view to_string(Category c) {
  switch (c) {
    case Category::Cat1: return "Cat1";
    case Category::Cat2: return "Cat2";
    case Category::Cat3: return "Cat3";
  }
  return "?";
}

inline std::string_view to_string(SegmentId s) {
  switch (s) {
    case SegmentId::None: return "none";
    case SegmentId::S1: return "S1";
    case SegmentId::S2: return "S2";
    case SegmentId::S3: return "S3";
  }
  return "?";
}

inline std::string_view to_string(VisitOrigin o) {
  return o == VisitOrigin::PreExisting ? "pre_existing" : "ips_created";
}

/// Rank used for pickup ordering: C3 = 0 (earliest) ... C1 = 2.
inline int pickup_rank(StackClass c) { return 2 - static_cast<int>(c); }

struct Container {
  std::string id;
  Date arrival_date{};
  int free_days = 0;
  double weight_tons = 0.0;
  std::string cargo_type;
  double pickup_probability = 0.0;
  std::string consignee_id;
  std::optional<std::string> carrier_id;
  int carrier_visits_per_month = 0;
  std::string owner_id;
  std::optional<int> appointment_block;
  std::string destination;

  bool operator==(const Container&) const = default;
};

inline void validate(const Container& c) {
  auto fail = [&](const std::string& what) {
    return ValidationError("container '" + c.id + "': " + what);
  };
  if (c.id.empty()) throw ValidationError("container id must not be empty");
  if (!c.arrival_date.ok()) throw fail("invalid arrival date");
  if (c.free_days < 0) throw fail("free_days must be >= 0");
  if (!(c.weight_tons > 0.0)) throw fail("weight_tons must be > 0");
  if (!(c.pickup_probability >= 0.0 && c.pickup_probability <= 1.0))
    throw fail("pickup_probability must be in [0,1]");
  if (c.carrier_visits_per_month < 0) throw fail("carrier_visits_per_month must be >= 0");
  if (c.appointment_block && *c.appointment_block < 0) throw fail("appointment_block must be >= 0");
}

struct TerminalParams {
  int gate_servers = 2;           // S_gate
  double clear_minutes = 1.0;     // T_clear
  double load_minutes = 25.0;     // T_load
  double inspect_minutes = 5.0;   // T_inspect
  double rehandle_minutes = 6.0;  // per extra crane move at pickup
  int max_waiting_trucks = 60;    // M_0
  int blocks_per_day = 9;
  int block_minutes = 60;
  int max_tier = 4;               // H_max

  bool operator==(const TerminalParams&) const = default;
};

struct GateLocation {
  int bay = 0;
  int row = 0;
  bool operator==(const GateLocation&) const = default;
};

struct YardLayout {
  int length_bays = 1;
  int width_rows = 1;
  GateLocation entry_gate{};
  GateLocation exit_gate{0, 1};
  int total_container_census = 0;

  int stack_count() const { return length_bays * width_rows; }
  bool operator==(const YardLayout&) const = default;
};

inline void validate(const YardLayout& layout, int max_tier) {
  if (layout.length_bays < 1 || layout.width_rows < 1)
    throw ValidationError("yard must have at least one bay and one row");
  if (max_tier < 1) throw ValidationError("max_tier must be >= 1");
  if (layout.entry_gate == layout.exit_gate)
    throw ValidationError("entry and exit gates must differ");
  if (layout.total_container_census < 0) throw ValidationError("census must be >= 0");
  if (static_cast<long>(layout.stack_count()) * max_tier < layout.total_container_census)
    throw ValidationError("yard capacity is below the container census");
}

struct Slot {
  int bay = 0;
  int row = 0;
  int tier = 0;
  SegmentId segment = SegmentId::None;

  bool operator==(const Slot&) const = default;
  auto operator<=>(const Slot&) const = default;
};

struct TruckVisit {
  std::string container_id;
  std::string carrier_id;
  std::uint64_t booked_at = 0;
  VisitOrigin origin = VisitOrigin::PreExisting;
  // Last block the visit may be moved to; unset means the whole day is legal.
  std::optional<int> deadline_block;

  bool operator==(const TruckVisit&) const = default;
};

struct TimeBlock {
  int index = 0;
  std::vector<TruckVisit> visits;

  int truck_count() const { return static_cast<int>(visits.size()); }
  bool operator==(const TimeBlock&) const = default;
};

}  // namespace ips
