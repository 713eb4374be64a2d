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

#include "shapeservo/plant.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "shapeservo/errors.hpp"

namespace shapeservo {
namespace {

struct CenterSample {
  double x, y;    // position, m
  double tx, ty;  // tangent (not normalized)
};

struct Pose2 {
  double x, y, theta;
};

void append_hermite(std::vector<CenterSample>& out, double x0, double y0, double mx0, double my0,
                    double x1, double y1, double mx1, double my1, std::size_t count,
                    bool skip_first) {
  for (std::size_t i = skip_first ? 1 : 0; i <= count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count);
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    const double d00 = 6.0 * t2 - 6.0 * t;
    const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double d01 = -6.0 * t2 + 6.0 * t;
    const double d11 = 3.0 * t2 - 2.0 * t;
    out.push_back({h00 * x0 + h10 * mx0 + h01 * x1 + h11 * mx1,
                   h00 * y0 + h10 * my0 + h01 * y1 + h11 * my1,
                   d00 * x0 + d10 * mx0 + d01 * x1 + d11 * mx1,
                   d00 * y0 + d10 * my0 + d01 * y1 + d11 * my1});
  }
}

void append_segment(std::vector<CenterSample>& out, double x0, double y0, double x1, double y1,
                    std::size_t count) {
  const double tx = x1 - x0;
  const double ty = y1 - y0;
  for (std::size_t i = 1; i <= count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count);
    out.push_back({x0 + t * tx, y0 + t * ty, tx, ty});
  }
}

Pose2 arm(const GripperState& s, int i) {
  return {s.r[3 * i], s.r[3 * i + 1], s.r[3 * i + 2]};
}

void require_separated(const Pose2& a, const Pose2& b, const ObjectModel& obj) {
  if (std::hypot(b.x - a.x, b.y - a.y) < 2.0 * obj.half_width) {
    throw InvalidConfiguration("invalid configuration: grippers closer than 2w");
  }
}

std::vector<CenterSample> centerline(const GripperState& s, const ObjectModel& obj) {
  const Pose2 a = arm(s, 0);
  const Pose2 b = arm(s, 1);
  require_separated(a, b, obj);
  const double tau = obj.tangent_scale;
  std::vector<CenterSample> line;
  line.reserve(obj.centerline_samples + 2);
  if (obj.kind == ObjectKind::kElasticCable) {
    append_hermite(line, a.x, a.y, tau * std::cos(a.theta), tau * std::sin(a.theta), b.x, b.y,
                   tau * std::cos(b.theta), tau * std::sin(b.theta), obj.centerline_samples, false);
    return line;
  }
  // nh-beam: rigid core posed at the mean of both grippers.
  const double mx = 0.5 * (a.x + b.x);
  const double my = 0.5 * (a.y + b.y);
  const double mt = std::atan2(std::sin(a.theta) + std::sin(b.theta),
                               std::cos(a.theta) + std::cos(b.theta));
  const double half = 0.5 * obj.rigid_fraction * obj.length;
  const double cx = std::cos(mt);
  const double cy = std::sin(mt);
  const double px = mx - half * cx, py = my - half * cy;
  const double qx = mx + half * cx, qy = my + half * cy;
  // Each flexible half spans (1 - rho) / 2 of the beam; its tangents shrink
  // with it so short halves do not loop.
  const double th = 0.5 * (1.0 - obj.rigid_fraction) * tau;
  const std::size_t flex = std::max<std::size_t>(obj.centerline_samples * 3 / 8, 4);
  const std::size_t core = std::max<std::size_t>(obj.centerline_samples - 2 * flex, 2);
  append_hermite(line, a.x, a.y, th * std::cos(a.theta), th * std::sin(a.theta), px, py, th * cx,
                 th * cy, flex, false);
  if (half > 0.0) append_segment(line, px, py, qx, qy, core);
  append_hermite(line, qx, qy, th * cx, th * cy, b.x, b.y, th * std::cos(b.theta),
                 th * std::sin(b.theta), flex, true);
  return line;
}

// Closed outline at distance w around the centerline with round end caps,
// traversed left side forward, far cap, right side backward, near cap.
std::vector<Point2> offset_outline(const std::vector<CenterSample>& line, const ObjectModel& obj) {
  const double w = obj.half_width;
  std::vector<Point2> left;
  std::vector<Point2> right;
  left.reserve(line.size());
  right.reserve(line.size());
  for (const auto& c : line) {
    const double norm = std::hypot(c.tx, c.ty);
    if (!(norm > 1e-12)) throw InvalidConfiguration("invalid configuration: centerline stalls");
    const double nx = -c.ty / norm;
    const double ny = c.tx / norm;
    left.push_back({c.x + w * nx, c.y + w * ny});
    right.push_back({c.x - w * nx, c.y - w * ny});
  }
  std::vector<Point2> out;
  out.reserve(2 * line.size() + 2 * obj.cap_samples);
  auto cap = [&](const CenterSample& c, double start) {
    for (std::size_t i = 1; i < obj.cap_samples; ++i) {
      const double a = start - std::numbers::pi * static_cast<double>(i) /
                                   static_cast<double>(obj.cap_samples);
      out.push_back({c.x + w * std::cos(a), c.y + w * std::sin(a)});
    }
  };
  out.insert(out.end(), left.begin(), left.end());
  const auto& end = line.back();
  cap(end, std::atan2(end.tx, -end.ty));
  out.insert(out.end(), right.rbegin(), right.rend());
  const auto& begin = line.front();
  cap(begin, std::atan2(-begin.tx, begin.ty));
  return out;
}

std::vector<Point2> box_outline(const GripperState& s, const ObjectModel& obj) {
  const Pose2 a = arm(s, 0);
  const Pose2 b = arm(s, 1);
  require_separated(a, b, obj);
  const double mx = 0.5 * (a.x + b.x);
  const double my = 0.5 * (a.y + b.y);
  const double ang = std::atan2(b.y - a.y, b.x - a.x);
  const double c = std::cos(ang);
  const double sn = std::sin(ang);
  const double hl = 0.5 * obj.length;
  const double hw = 0.5 * obj.box_width;
  const double corners[4][2] = {{-hl, -hw}, {hl, -hw}, {hl, hw}, {-hl, hw}};
  std::vector<Point2> out;
  for (const auto& k : corners) {
    out.push_back({mx + c * k[0] - sn * k[1], my + sn * k[0] + c * k[1]});
  }
  return out;
}

Contour to_pixels(const std::vector<Point2>& world, const ObjectModel& obj) {
  std::vector<double> u(world.size());
  std::vector<double> v(world.size());
  for (std::size_t i = 0; i < world.size(); ++i) {
    u[i] = obj.image_offset.u + obj.pixels_per_meter * world[i].u;
    v[i] = obj.image_offset.v - obj.pixels_per_meter * world[i].v;
  }
  return Contour(std::move(u), std::move(v));
}

}  // namespace

GripperState GripperState::make(const Vec6& r) {
  GripperState s{r};
  s.r[2] = wrap_angle(r[2]);
  s.r[5] = wrap_angle(r[5]);
  return s;
}

ObjectKind parse_object_kind(std::string_view name) {
  if (name == "elastic-cable") return ObjectKind::kElasticCable;
  if (name == "rigid-box") return ObjectKind::kRigidBox;
  if (name == "nh-beam") return ObjectKind::kNhBeam;
  throw Error("unknown object kind '" + std::string(name) + "'");
}

std::string_view object_kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kElasticCable:
      return "elastic-cable";
    case ObjectKind::kRigidBox:
      return "rigid-box";
    case ObjectKind::kNhBeam:
      return "nh-beam";
  }
  return "unknown";
}

void ObjectModel::validate() const {
  if (!(half_width > 0.0)) throw InvalidConfiguration("object.w must be positive");
  if (!(tangent_scale > 0.0)) throw InvalidConfiguration("object.tau must be positive");
  if (!(pixels_per_meter > 0.0)) throw InvalidConfiguration("camera.scale must be positive");
  if (!(rigid_fraction >= 0.0 && rigid_fraction <= 1.0)) {
    throw InvalidConfiguration("object.rho must lie in [0, 1]");
  }
  if (!(length > 0.0) || !(box_width > 0.0)) {
    throw InvalidConfiguration("object dimensions must be positive");
  }
  if (centerline_samples < 4 || cap_samples < 2) {
    throw InvalidConfiguration("object sampling too coarse");
  }
}

GripperState plant_step(const GripperState& r, const Vec6& u, double dt, const ObjectModel& obj) {
  GripperState next = GripperState::make(r.r + u * dt);
  if (obj.kind == ObjectKind::kRigidBox) {
    const Eigen::Vector2d p1(next.r[0], next.r[1]);
    const Eigen::Vector2d p2(next.r[3], next.r[4]);
    const Eigen::Vector2d mid = 0.5 * (p1 + p2);
    const Eigen::Vector2d sep = p2 - p1;
    const double d = sep.norm();
    if (d > 0.0) {
      const Eigen::Vector2d half = 0.5 * obj.length / d * sep;
      next.r.segment<2>(0) = mid - half;
      next.r.segment<2>(3) = mid + half;
    }
  }
  return next;
}

Contour plant_observe(const GripperState& r, const ObjectModel& obj, std::size_t n) {
  const auto outline = obj.kind == ObjectKind::kRigidBox
                           ? box_outline(r, obj)
                           : offset_outline(centerline(r, obj), obj);
  return resample_closed(to_pixels(outline, obj), n);
}

Mat10x6 probe_initial_jacobian(const GripperState& r, const ObjectModel& obj, double delta,
                               const CameraSpec& cam, std::size_t n) {
  Mat10x6 jac;
  for (int j = 0; j < kPoseDim; ++j) {
    GripperState plus = r;
    GripperState minus = r;
    plus.r[j] += delta;
    minus.r[j] -= delta;
    const Vec10 sp = extract_features(plant_observe(plus, obj, n), cam);
    const Vec10 sm = extract_features(plant_observe(minus, obj, n), cam);
    jac.col(j) = (sp - sm) / (2.0 * delta);
  }
  return jac;
}

}  // namespace shapeservo
