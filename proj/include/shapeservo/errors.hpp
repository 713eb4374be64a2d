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

#include <stdexcept>
#include <string>

namespace shapeservo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contour with zero perimeter, too few points, or non-finite coordinates.
class DegenerateContour : public Error {
 public:
  explicit DegenerateContour(const std::string& what = "degenerate contour") : Error(what) {}
};

// Gripper poses for which the object model cannot produce a contour.
class InvalidConfiguration : public Error {
 public:
  explicit InvalidConfiguration(const std::string& what = "invalid configuration") : Error(what) {}
};

// An online Jacobian estimate produced a non-finite entry.
class EstimatorDiverged : public Error {
 public:
  explicit EstimatorDiverged(const std::string& what = "estimator diverged") : Error(what) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace shapeservo
