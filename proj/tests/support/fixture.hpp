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

#include <string>

#include "ips/config.hpp"
#include "ips/manifest.hpp"
#include "ips/scenario.hpp"
#include "ips/service.hpp"

#ifndef IPS_SOURCE_DIR
#error "IPS_SOURCE_DIR must point at the source tree"
#endif

namespace ips::testing {

inline std::string source_path(const std::string& relative) { return std::string(IPS_SOURCE_DIR) + "/" + relative; }

struct Fixture {
  EngineConfig config;
  Dataset data;
};

/// data/fixture.json with its manifest, as the CLI would load it.
inline Fixture load_fixture() {
  auto loaded = load_config(source_path("data/fixture.json"));
  auto parsed = load_manifest(*loaded.manifest_path, loaded.config.cargo_pickup);
  Fixture f;
  f.config = loaded.config;
  f.data.current_date = operational_day(f.config, parsed.containers);
  f.data.containers = std::move(parsed.containers);
  return f;
}

}  // namespace ips::testing
