// Copyright 2026 The shapeservo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "shapeservo/errors.hpp"
#include "shapeservo/harness.hpp"

namespace shapeservo {

Metrics compute_metrics(std::span<const ErrorSample> trace, double threshold, int budget) {
  if (trace.empty()) throw Error("metrics need a non-empty trace");
  Metrics m;
  m.t_max_steps = budget;
  const double e0 = trace.front().norm_e1;
  const double t0 = trace.front().t;
  const double decay_level = 0.1 * e0;

  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& s = trace[k];
    if (!m.threshold_reached && s.norm_e1 < threshold) {
      m.threshold_reached = true;
      m.t_max_steps = static_cast<int>(k);
    }
    if (!m.t_d && (s.norm_e1 <= decay_level || e0 <= threshold)) {
      m.t_d = s.t - t0;
      m.t_d_steps = static_cast<int>(k);
    }
    if (m.t_d && !m.t_s && s.norm_e1 <= threshold) m.t_s = s.t - t0 - *m.t_d;
    if (k + 1 < trace.size()) m.iae += s.norm_e1 * (trace[k + 1].t - s.t);
  }
  return m;
}

Metrics compute_metrics(const RunRecord& rec, double threshold, int budget) {
  if (rec.ticks.empty()) {
    Metrics m;
    m.t_max_steps = budget;
    return m;
  }
  std::vector<ErrorSample> trace;
  trace.reserve(rec.ticks.size());
  for (const auto& t : rec.ticks) trace.push_back({t.t, t.e1.norm()});
  return compute_metrics(trace, threshold, budget);
}

}  // namespace shapeservo
