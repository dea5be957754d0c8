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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ips/classifier.hpp"
#include "ips/model.hpp"
#include "ips/solver.hpp"

namespace ips {

/// Pickup probability per cargo type, used when a manifest row leaves the
/// probability blank. These are planning defaults for this tool, not
/// measured values.
inline std::map<std::string, double> default_cargo_pickup_table() {
  return {
      {"perishable", 0.9}, {"pharmaceutical", 0.85}, {"retail", 0.75}, {"electronics", 0.7},
      {"automotive", 0.6}, {"general", 0.5},         {"textiles", 0.5}, {"machinery", 0.4},
      {"raw_material", 0.3}, {"empty", 0.2},
  };
}

/// Everything the engine needs besides the manifest.
struct EngineConfig {
  TerminalParams terminal;
  YardLayout yard{8, 4, {0, 0}, {8, 0}, 0};
  DiscriminantCoefficients discriminant;
  ObjectiveWeights objective;
  SolverBudget solver;
  std::uint64_t seed = 7;
  std::optional<Date> operational_day;   // defaults to the latest arrival in the manifest
  std::optional<std::string> manifest;   // CSV path, relative to the config file
  std::map<std::string, double> cargo_pickup = default_cargo_pickup_table();

  bool operator==(const EngineConfig&) const = default;
};

}  // namespace ips
