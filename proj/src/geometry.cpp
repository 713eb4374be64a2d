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

#include "shapeservo/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "shapeservo/errors.hpp"
#include "shapeservo/kernels.hpp"

namespace shapeservo {

Contour::Contour(std::vector<double> u, std::vector<double> v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.size() != v_.size()) throw DegenerateContour("contour coordinate arrays differ in length");
  if (u_.size() < 3) throw DegenerateContour("contour needs at least 3 points");
  for (std::size_t i = 0; i < u_.size(); ++i) {
    if (!std::isfinite(u_[i]) || !std::isfinite(v_[i])) {
      throw DegenerateContour("contour has a non-finite coordinate");
    }
  }
}

Contour Contour::from_points(std::span<const Point2> points) {
  std::vector<double> u(points.size());
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    u[i] = points[i].u;
    v[i] = points[i].v;
  }
  return Contour(std::move(u), std::move(v));
}

Contour Contour::rotated_start(std::size_t shift) const {
  const std::size_t n = size();
  std::vector<double> u(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = u_[(i + shift) % n];
    v[i] = v_[(i + shift) % n];
  }
  return Contour(std::move(u), std::move(v));
}

double wrap_angle(double a) {
  constexpr double kPi = std::numbers::pi;
  double w = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

RigidTransform2D RigidTransform2D::make(Point2 translation, double rotation) {
  return RigidTransform2D{translation, wrap_angle(rotation)};
}

std::vector<double> arc_lengths(const Contour& c) {
  std::vector<double> dm(c.size());
  kernels::active_kernels().segment_lengths(c.u(), c.v(), dm);
  const double total = std::accumulate(dm.begin(), dm.end(), 0.0);
  if (!(total > 0.0)) throw DegenerateContour();
  return dm;
}

double perimeter(const Contour& c) {
  const auto dm = arc_lengths(c);
  return std::accumulate(dm.begin(), dm.end(), 0.0);
}

Contour resample_closed(const Contour& c, std::size_t n) {
  if (n < 3) throw DegenerateContour("resampling needs at least 3 points");
  const auto dm = arc_lengths(c);
  const std::size_t m = c.size();
  // seg[i] runs from vertex i to vertex (i + 1) % m and has length dm[(i + 1) % m].
  std::vector<double> start(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) start[i + 1] = start[i] + dm[(i + 1) % m];
  const double total = start[m];
  const double step = total / static_cast<double>(n);

  const auto u = c.u();
  const auto v = c.v();
  std::vector<double> ou(n);
  std::vector<double> ov(n);
  ou[0] = u[0];
  ov[0] = v[0];
  std::size_t seg = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const double target = step * static_cast<double>(j);
    while (seg + 1 < m && start[seg + 1] <= target) ++seg;
    const double len = start[seg + 1] - start[seg];
    const double t = len > 0.0 ? (target - start[seg]) / len : 0.0;
    const std::size_t next = (seg + 1) % m;
    ou[j] = u[seg] + t * (u[next] - u[seg]);
    ov[j] = v[seg] + t * (v[next] - v[seg]);
  }
  return Contour(std::move(ou), std::move(ov));
}

Contour apply_rigid(const Contour& c, const RigidTransform2D& t) {
  const double cs = std::cos(t.rotation);
  const double sn = std::sin(t.rotation);
  const std::size_t n = c.size();
  std::vector<double> u(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = c[i];
    u[i] = cs * p.u - sn * p.v + t.translation.u;
    v[i] = sn * p.u + cs * p.v + t.translation.v;
  }
  return Contour(std::move(u), std::move(v));
}

Contour read_contour(std::istream& in) {
  std::vector<double> u;
  std::vector<double> v;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double a = 0.0;
    double b = 0.0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw Error("contour line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    u.push_back(a);
    v.push_back(b);
  }
  return Contour(std::move(u), std::move(v));
}

Contour read_contour_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open contour file " + path.string());
  return read_contour(in);
}

}  // namespace shapeservo
