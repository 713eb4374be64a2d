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

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace shapeservo {

struct Point2 {
  double u = 0.0;
  double v = 0.0;
};

// Ordered closed polyline in pixel coordinates. The last point connects back
// to the first. Coordinates are kept structure-of-arrays so the moment
// kernels can stream them.
class Contour {
 public:
  // Throws DegenerateContour when fewer than three points are given, the
  // coordinate arrays differ in length, or any coordinate is non-finite.
  Contour(std::vector<double> u, std::vector<double> v);

  static Contour from_points(std::span<const Point2> points);

  std::size_t size() const { return u_.size(); }
  std::span<const double> u() const { return u_; }
  std::span<const double> v() const { return v_; }
  Point2 operator[](std::size_t i) const { return {u_[i], v_[i]}; }

  // Same points, first vertex moved to index `shift`.
  Contour rotated_start(std::size_t shift) const;

  friend bool operator==(const Contour&, const Contour&) = default;

 private:
  std::vector<double> u_;
  std::vector<double> v_;
};

// Rotation about the origin followed by a translation.
struct RigidTransform2D {
  Point2 translation;
  double rotation = 0.0;  // (-pi, pi]

  static RigidTransform2D make(Point2 translation, double rotation);
};

// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

// Δm_k = |c_k - c_{k-1}| with c_0 := c_N. Zero entries are allowed; a zero
// perimeter throws DegenerateContour.
std::vector<double> arc_lengths(const Contour& c);

double perimeter(const Contour& c);

// N points at equal arc-length steps along the closed polyline, starting at
// the first input vertex.
Contour resample_closed(const Contour& c, std::size_t n);

Contour apply_rigid(const Contour& c, const RigidTransform2D& t);

// Plain-text contour format: one "u v" pair per line, implicit closure.
// Blank lines and lines starting with '#' are skipped.
Contour read_contour(std::istream& in);
Contour read_contour_file(const std::filesystem::path& path);

}  // namespace shapeservo
