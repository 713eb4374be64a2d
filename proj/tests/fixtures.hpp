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

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "shapeservo/geometry.hpp"

namespace shapeservo::testing {

// Star-shaped polygon with jittered radii around (cu, cv).
inline Contour random_contour(std::mt19937_64& rng, double cu = 320.0, double cv = 240.0) {
  std::uniform_int_distribution<int> count(8, 60);
  std::uniform_real_distribution<double> radius(20.0, 120.0);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  const int n = count(rng);
  std::vector<double> u, v;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * (k + jitter(rng)) / n;
    const double r = radius(rng);
    u.push_back(cu + r * std::cos(a));
    v.push_back(cv + r * std::sin(a));
  }
  return Contour(u, v);
}

inline RigidTransform2D random_transform(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> shift(-200.0, 200.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return RigidTransform2D::make({shift(rng), shift(rng)}, angle(rng));
}

}  // namespace shapeservo::testing
