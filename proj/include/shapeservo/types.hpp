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

#include <Eigen/Core>

namespace shapeservo {

inline constexpr int kFeatureDim = 10;
inline constexpr int kPoseDim = 6;

using Vec6 = Eigen::Matrix<double, kPoseDim, 1>;
using Vec10 = Eigen::Matrix<double, kFeatureDim, 1>;
using Mat10x6 = Eigen::Matrix<double, kFeatureDim, kPoseDim>;

}  // namespace shapeservo
