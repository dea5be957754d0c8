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

// JSON engine configuration. Every key is optional and falls back to the
// EngineConfig default; unknown keys are rejected so typos surface early.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "ips/engine_config.hpp"
#include "ips/manifest.hpp"
#include "ips/scheduler.hpp"

namespace ips {

inline constexpr const char* kConfigEnvVar = "IPS_CONFIG";

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& j, std::initializer_list<std::string_view> known,
                           std::string_view where) {
  if (!j.is_object()) throw ValidationError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ValidationError(std::string(where) + ": unknown key '" + key + "'");
}

template <class T>
void read(const json& j, const char* key, T& out, std::string_view where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(where) + "." + key + ": wrong type");
  }
}

inline json gate_json(const GateLocation& g) { return {{"bay", g.bay}, {"row", g.row}}; }

inline GateLocation gate_from(const json& j, std::string_view where) {
  reject_unknown(j, {"bay", "row"}, where);
  GateLocation g;
  read(j, "bay", g.bay, where);
  read(j, "row", g.row, where);
  return g;
}

}  // namespace detail

inline nlohmann::json to_json(const EngineConfig& c) {
  using nlohmann::json;
  const auto& t = c.terminal;
  json j;
  j["terminal"] = {{"gate_servers", t.gate_servers},
                   {"clear_minutes", t.clear_minutes},
                   {"load_minutes", t.load_minutes},
                   {"inspect_minutes", t.inspect_minutes},
                   {"rehandle_minutes", t.rehandle_minutes},
                   {"max_waiting_trucks", t.max_waiting_trucks},
                   {"blocks_per_day", t.blocks_per_day},
                   {"block_minutes", t.block_minutes},
                   {"max_tier", t.max_tier}};
  j["yard"] = {{"length_bays", c.yard.length_bays},
               {"width_rows", c.yard.width_rows},
               {"entry_gate", detail::gate_json(c.yard.entry_gate)},
               {"exit_gate", detail::gate_json(c.yard.exit_gate)},
               {"census", c.yard.total_container_census}};
  json classes = json::array();
  for (const auto& f : c.discriminant.classes)
    classes.push_back({{"intercept", f.intercept}, {"consignee", f.consignee_weight}, {"cargo", f.cargo_weight}});
  j["discriminant"] = classes;
  j["objective"] = {{"alpha", c.objective.rehandle}, {"beta", c.objective.relocation}, {"gamma", c.objective.zorder}};
  j["solver"] = {{"max_nodes", c.solver.max_nodes}};
  j["seed"] = c.seed;
  if (c.operational_day) j["operational_day"] = format_date(*c.operational_day);
  if (c.manifest) j["manifest"] = *c.manifest;
  j["cargo_pickup"] = c.cargo_pickup;
  return j;
}

inline EngineConfig config_from_json(const nlohmann::json& j) {
  using detail::read;
  detail::reject_unknown(j, {"terminal", "yard", "discriminant", "objective", "solver", "seed",
                             "operational_day", "manifest", "cargo_pickup"},
                         "config");
  EngineConfig c;
  if (j.contains("terminal")) {
    const auto& t = j["terminal"];
    detail::reject_unknown(t, {"gate_servers", "clear_minutes", "load_minutes", "inspect_minutes",
                               "rehandle_minutes", "max_waiting_trucks", "blocks_per_day",
                               "block_minutes", "max_tier"},
                           "terminal");
    auto& p = c.terminal;
    read(t, "gate_servers", p.gate_servers, "terminal");
    read(t, "clear_minutes", p.clear_minutes, "terminal");
    read(t, "load_minutes", p.load_minutes, "terminal");
    read(t, "inspect_minutes", p.inspect_minutes, "terminal");
    read(t, "rehandle_minutes", p.rehandle_minutes, "terminal");
    read(t, "max_waiting_trucks", p.max_waiting_trucks, "terminal");
    read(t, "blocks_per_day", p.blocks_per_day, "terminal");
    read(t, "block_minutes", p.block_minutes, "terminal");
    read(t, "max_tier", p.max_tier, "terminal");
  }
  if (j.contains("yard")) {
    const auto& y = j["yard"];
    detail::reject_unknown(y, {"length_bays", "width_rows", "entry_gate", "exit_gate", "census"}, "yard");
    read(y, "length_bays", c.yard.length_bays, "yard");
    read(y, "width_rows", c.yard.width_rows, "yard");
    read(y, "census", c.yard.total_container_census, "yard");
    if (y.contains("entry_gate")) c.yard.entry_gate = detail::gate_from(y["entry_gate"], "yard.entry_gate");
    if (y.contains("exit_gate")) c.yard.exit_gate = detail::gate_from(y["exit_gate"], "yard.exit_gate");
  }
  if (j.contains("discriminant")) {
    const auto& d = j["discriminant"];
    if (!d.is_array() || d.size() != 3)
      throw ValidationError("discriminant: expected an array of three functions");
    for (std::size_t i = 0; i < 3; ++i) {
      detail::reject_unknown(d[i], {"intercept", "consignee", "cargo"}, "discriminant");
      auto& f = c.discriminant.classes[i];
      read(d[i], "intercept", f.intercept, "discriminant");
      read(d[i], "consignee", f.consignee_weight, "discriminant");
      read(d[i], "cargo", f.cargo_weight, "discriminant");
    }
  }
  if (j.contains("objective")) {
    const auto& o = j["objective"];
    detail::reject_unknown(o, {"alpha", "beta", "gamma"}, "objective");
    read(o, "alpha", c.objective.rehandle, "objective");
    read(o, "beta", c.objective.relocation, "objective");
    read(o, "gamma", c.objective.zorder, "objective");
  }
  if (j.contains("solver")) {
    detail::reject_unknown(j["solver"], {"max_nodes"}, "solver");
    read(j["solver"], "max_nodes", c.solver.max_nodes, "solver");
  }
  read(j, "seed", c.seed, "config");
  if (j.contains("operational_day")) {
    std::string day;
    read(j, "operational_day", day, "config");
    c.operational_day = parse_date(day);
  }
  if (j.contains("manifest")) {
    std::string path;
    read(j, "manifest", path, "config");
    c.manifest = path;
  }
  read(j, "cargo_pickup", c.cargo_pickup, "config");
  for (const auto& [cargo, p] : c.cargo_pickup)
    if (!(p >= 0.0 && p <= 1.0))
      throw ValidationError("cargo_pickup." + cargo + ": probability outside [0,1]");
  validate(c.terminal);
  validate(c.yard, c.terminal.max_tier);
  if (c.solver.max_nodes == 0) throw ValidationError("solver.max_nodes must be >= 1");
  return c;
}

inline EngineConfig parse_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

inline std::string serialize_config(const EngineConfig& c) { return to_json(c).dump(2) + "\n"; }

/// Config file to use: the explicit path if given, else $IPS_CONFIG, else none.
inline std::optional<std::string> resolve_config_path(const std::optional<std::string>& explicit_path) {
  if (explicit_path && !explicit_path->empty()) return explicit_path;
  if (const char* env = std::getenv(kConfigEnvVar); env && *env) return std::string(env);
  return std::nullopt;
}

struct LoadedConfig {
  EngineConfig config;
  std::optional<std::string> path;
  std::optional<std::string> manifest_path;  // resolved against the config's directory
};

inline LoadedConfig load_config(const std::optional<std::string>& explicit_path) {
  LoadedConfig out;
  out.path = resolve_config_path(explicit_path);
  if (!out.path) return out;
  out.config = parse_config(read_file(*out.path));
  if (out.config.manifest) {
    std::filesystem::path m(*out.config.manifest);
    if (m.is_relative()) m = std::filesystem::path(*out.path).parent_path() / m;
    out.manifest_path = m.lexically_normal().string();
  }
  return out;
}

}  // namespace ips
