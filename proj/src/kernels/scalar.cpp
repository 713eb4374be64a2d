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

#include <cmath>
#include <cstddef>

#include "shapeservo/kernels.hpp"

namespace shapeservo::kernels {
namespace {

void segment_lengths_scalar(std::span<const double> u, std::span<const double> v,
                            std::span<double> out) {
  const std::size_t n = u.size();
  if (n == 0) return;
  double pu = u[n - 1];
  double pv = v[n - 1];
  for (std::size_t k = 0; k < n; ++k) {
    const double du = u[k] - pu;
    const double dv = v[k] - pv;
    out[k] = std::sqrt(du * du + dv * dv);
    pu = u[k];
    pv = v[k];
  }
}

PowerSums power_sums_scalar(std::span<const double> u, std::span<const double> v,
                            std::span<const double> w, double cu, double cv) {
  PowerSums s{};
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double x = u[k] - cu;
    const double y = v[k] - cv;
    const double wk = w[k];
    const double xw = x * wk;
    const double yw = y * wk;
    const double xxw = x * xw;
    const double xyw = x * yw;
    const double yyw = y * yw;
    s[0] += wk;
    s[1] += xw;
    s[2] += yw;
    s[3] += xxw;
    s[4] += xyw;
    s[5] += yyw;
    s[6] += x * xxw;
    s[7] += y * xxw;
    s[8] += x * yyw;
    s[9] += y * yyw;
  }
  return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar, &segment_lengths_scalar, &power_sums_scalar};
  return table;
}

}  // namespace shapeservo::kernels
