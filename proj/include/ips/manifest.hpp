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

// Container manifest in CSV (RFC 4180 quoting, LF or CRLF line ends).

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ips/model.hpp"

namespace ips {

inline constexpr std::array<std::string_view, 12> kManifestColumns = {
    "container_id", "arrival_date",    "free_days",                "weight_tons",
    "cargo_type",   "pickup_probability", "consignee_id",          "carrier_id",
    "carrier_visits_per_month", "owner_id", "appointment_block",   "destination"};

struct ManifestError {
  int row = 0;  // 1-based data row; 0 for the header
  std::string message;
  bool operator==(const ManifestError&) const = default;
};

struct ManifestParse {
  std::vector<Container> containers;
  std::vector<ManifestError> errors;
};

namespace detail {

using CsvRecord = std::vector<std::string>;

// Splits CSV text into records. Quoted fields may hold commas, quotes ("")
// and line breaks.
inline std::vector<CsvRecord> split_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool quoted = false, in_record = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch != '"') {
        field += ch;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    switch (ch) {
      case '"':
        quoted = true;
        in_record = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        in_record = true;
        break;
      case '\r':
        break;
      case '\n':
        if (in_record || !field.empty()) {
          record.push_back(std::move(field));
          records.push_back(std::move(record));
        }
        field.clear();
        record.clear();
        in_record = false;
        break;
      default:
        field += ch;
        in_record = true;
    }
  }
  if (quoted) throw ValidationError("unterminated quoted field at end of manifest");
  if (in_record || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

template <class T>
T parse_number(const std::string& text, std::string_view column) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ValidationError(std::string(column) + ": cannot parse '" + text + "'");
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(value)) throw ValidationError(std::string(column) + ": must be finite");
  return value;
}

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline Container parse_row(const CsvRecord& f, const std::map<std::string, double>& cargo_table) {
  if (f.size() != kManifestColumns.size())
    throw ValidationError("expected " + std::to_string(kManifestColumns.size()) + " fields, found " +
                          std::to_string(f.size()));
  Container c;
  c.id = f[0];
  if (c.id.empty()) throw ValidationError("container_id: must not be empty");
  c.arrival_date = parse_date(f[1]);
  c.free_days = parse_number<int>(f[2], "free_days");
  c.weight_tons = parse_number<double>(f[3], "weight_tons");
  c.cargo_type = f[4];
  if (f[5].empty()) {
    auto it = cargo_table.find(c.cargo_type);
    if (it == cargo_table.end())
      throw ValidationError("pickup_probability: blank and cargo type '" + c.cargo_type +
                            "' has no default");
    c.pickup_probability = it->second;
  } else {
    c.pickup_probability = parse_number<double>(f[5], "pickup_probability");
  }
  if (c.pickup_probability < 0.0 || c.pickup_probability > 1.0)
    throw ValidationError("pickup_probability: " + f[5] + " is outside [0,1]");
  c.consignee_id = f[6];
  if (!f[7].empty()) c.carrier_id = f[7];
  c.carrier_visits_per_month = parse_number<int>(f[8], "carrier_visits_per_month");
  c.owner_id = f[9];
  if (c.owner_id.empty()) throw ValidationError("owner_id: must not be empty");
  if (!f[10].empty()) c.appointment_block = parse_number<int>(f[10], "appointment_block");
  c.destination = f[11];
  validate(c);
  return c;
}

}  // namespace detail

/// Parses a manifest. Bad rows are reported and skipped; a missing or wrong
/// header, or no valid row at all, throws ValidationError.
inline ManifestParse parse_manifest(std::string_view text,
                                    const std::map<std::string, double>& cargo_table = {}) {
  const auto records = detail::split_csv(text);
  if (records.empty()) throw ValidationError("manifest is missing its header row");
  const auto& header = records.front();
  bool header_ok = header.size() == kManifestColumns.size();
  for (std::size_t i = 0; header_ok && i < header.size(); ++i) header_ok = header[i] == kManifestColumns[i];
  if (!header_ok) throw ValidationError("manifest header does not match the expected columns");

  ManifestParse out;
  std::set<std::string> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const int row = static_cast<int>(r);
    try {
      Container c = detail::parse_row(records[r], cargo_table);
      if (!ids.insert(c.id).second) throw ValidationError("duplicate container_id '" + c.id + "'");
      out.containers.push_back(std::move(c));
    } catch (const ValidationError& e) {
      out.errors.push_back({row, e.what()});
    }
  }
  if (out.containers.empty()) {
    std::string msg = "manifest has no valid rows";
    if (!out.errors.empty())
      msg += " (row " + std::to_string(out.errors.front().row) + ": " + out.errors.front().message + ")";
    throw ValidationError(msg);
  }
  return out;
}

inline std::string format_error(const ManifestError& e) {
  return "row " + std::to_string(e.row) + ": " + e.message;
}

inline std::string serialize_manifest(std::span<const Container> containers) {
  std::string out;
  for (std::size_t i = 0; i < kManifestColumns.size(); ++i) {
    if (i) out += ',';
    out += kManifestColumns[i];
  }
  out += '\n';
  for (const auto& c : containers) {
    const std::string fields[] = {
        c.id,
        format_date(c.arrival_date),
        std::to_string(c.free_days),
        detail::format_double(c.weight_tons),
        c.cargo_type,
        detail::format_double(c.pickup_probability),
        c.consignee_id,
        c.carrier_id.value_or(""),
        std::to_string(c.carrier_visits_per_month),
        c.owner_id,
        c.appointment_block ? std::to_string(*c.appointment_block) : "",
        c.destination,
    };
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out += ',';
      out += detail::csv_field(fields[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ManifestParse load_manifest(const std::string& path,
                                   const std::map<std::string, double>& cargo_table = {}) {
  return parse_manifest(read_file(path), cargo_table);
}

}  // namespace ips
