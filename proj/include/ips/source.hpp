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

// Pull-style container feeds. A replay recording looks like
//
//   {"events": [{"at": "2026-03-02T08:15:00Z",
//                "row": {"container_id": "MSKU1", "arrival_date": "2026-03-02", ...}}]}
//
// where "row" holds manifest columns as strings or numbers.

#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ips/manifest.hpp"

namespace ips {

struct Arrival {
  std::optional<std::string> at;  // UTC timestamp, replay only
  Container container;
  bool operator==(const Arrival&) const = default;
};

class ContainerSource {
 public:
  virtual ~ContainerSource() = default;
  /// Next arrival, or nullopt once the feed is exhausted.
  virtual std::optional<Arrival> next() = 0;

  std::vector<Arrival> drain() {
    std::vector<Arrival> out;
    while (auto a = next()) out.push_back(std::move(*a));
    return out;
  }
};

class CsvSource : public ContainerSource {
 public:
  explicit CsvSource(std::string_view text, const std::map<std::string, double>& cargo_table = {})
      : rows_(parse_manifest(text, cargo_table).containers) {}

  std::optional<Arrival> next() override {
    if (pos_ >= rows_.size()) return std::nullopt;
    return Arrival{std::nullopt, rows_[pos_++]};
  }

 private:
  std::vector<Container> rows_;
  std::size_t pos_ = 0;
};

namespace detail {

// Accepts exactly YYYY-MM-DDTHH:MM:SSZ.
inline void check_timestamp(const std::string& at) {
  auto bad = [&] { return ValidationError("invalid UTC timestamp '" + at + "'"); };
  if (at.size() != 20 || at[10] != 'T' || at[13] != ':' || at[16] != ':' || at[19] != 'Z') throw bad();
  parse_date(std::string_view(at).substr(0, 10));
  auto two = [&](std::size_t pos, int max) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(at.data() + pos, at.data() + pos + 2, v);
    if (ec != std::errc{} || ptr != at.data() + pos + 2 || v > max) throw bad();
  };
  two(11, 23);
  two(14, 59);
  two(17, 60);
}

inline std::string cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  throw ValidationError("replay row values must be strings or numbers");
}

}  // namespace detail

class ReplaySource : public ContainerSource {
 public:
  explicit ReplaySource(std::string_view recording,
                        const std::map<std::string, double>& cargo_table = {}) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(recording);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(std::string("replay recording is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
      throw ValidationError("replay recording needs an \"events\" array");
    int n = 0;
    for (const auto& e : j["events"]) {
      ++n;
      const std::string where = "event " + std::to_string(n) + ": ";
      try {
        if (!e.is_object() || !e.contains("at") || !e["at"].is_string() || !e.contains("row") ||
            !e["row"].is_object())
          throw ValidationError("needs \"at\" and \"row\"");
        std::string at = e["at"].get<std::string>();
        detail::check_timestamp(at);
        detail::CsvRecord record;
        for (auto column : kManifestColumns) {
          auto it = e["row"].find(std::string(column));
          record.push_back(it == e["row"].end() ? "" : detail::cell(*it));
        }
        events_.push_back({std::move(at), detail::parse_row(record, cargo_table)});
      } catch (const ValidationError& err) {
        throw ValidationError(where + err.what());
      }
    }
    // Fixed-width UTC stamps sort chronologically as strings.
    std::stable_sort(events_.begin(), events_.end(),
                     [](const Arrival& a, const Arrival& b) { return *a.at < *b.at; });
  }

  std::optional<Arrival> next() override {
    if (pos_ >= events_.size()) return std::nullopt;
    return events_[pos_++];
  }

 private:
  std::vector<Arrival> events_;
  std::size_t pos_ = 0;
};

/// kind is "csv" (manifest text) or "replay" (JSON recording).
inline std::unique_ptr<ContainerSource> make_source(std::string_view kind, std::string_view data,
                                                    const std::map<std::string, double>& cargo_table = {}) {
  if (kind == "csv") return std::make_unique<CsvSource>(data, cargo_table);
  if (kind == "replay") return std::make_unique<ReplaySource>(data, cargo_table);
  throw ValidationError("unknown source kind '" + std::string(kind) + "'");
}

}  // namespace ips
