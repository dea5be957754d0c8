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

#include <cmath>

#include "ips/model.hpp"

namespace ips {

/// Relative gain in daily trucks serviced over the baseline.
inline double throughput_gain(double m_optimized, double m_baseline) {
  if (m_baseline == 0.0) throw ValidationError("baseline throughput must be nonzero");
  return (m_optimized - m_baseline) / m_baseline;
}

/// Processing-time improvement. Positive means the truck count should come
/// down to relieve congestion; negative means there is room for more trucks.
inline double pt_improvement(double pt_hyp, double pt_real, double pt_baseline) {
  if (pt_hyp == 0.0) throw ValidationError("hypothetical processing time must be nonzero");
  return (std::abs(pt_hyp - pt_real) - (pt_hyp - pt_baseline)) / pt_hyp;
}

struct MetricsReport {
  double t_throughput = 0.0;
  double pt_improve = 0.0;
  double m_optimized = 0.0;
  double m_baseline = 0.0;
  double pt_hyp = 0.0;
  double pt_real = 0.0;
  double pt_baseline = 0.0;
};

inline MetricsReport make_metrics_report(double m_optimized, double m_baseline, double pt_hyp,
                                         double pt_real, double pt_baseline) {
  return {throughput_gain(m_optimized, m_baseline), pt_improvement(pt_hyp, pt_real, pt_baseline),
          m_optimized, m_baseline, pt_hyp, pt_real, pt_baseline};
}

}  // namespace ips
