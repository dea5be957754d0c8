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


// Umbrella header.

#pragma once

#include "ips/classifier.hpp"
#include "ips/cli.hpp"
#include "ips/config.hpp"
#include "ips/engine_config.hpp"
#include "ips/manifest.hpp"
#include "ips/metrics.hpp"
#include "ips/model.hpp"
#include "ips/scenario.hpp"
#include "ips/scheduler.hpp"
#include "ips/segments.hpp"
#include "ips/service.hpp"
#include "ips/solver.hpp"
#include "ips/source.hpp"
#include "ips/stacking.hpp"
#include "ips/yard.hpp"
