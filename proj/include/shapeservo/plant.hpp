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

#include <cstddef>
#include <string_view>

#include "shapeservo/geometry.hpp"
#include "shapeservo/moments.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

// Planar poses of both end-effectors, r = (x1, y1, th1, x2, y2, th2) in
// meters and radians.
struct GripperState {
  Vec6 r = Vec6::Zero();

  // Wraps both angles to (-pi, pi].
  static GripperState make(const Vec6& r);
};

enum class ObjectKind { kElasticCable, kRigidBox, kNhBeam };

ObjectKind parse_object_kind(std::string_view name);
std::string_view object_kind_name(ObjectKind kind);

struct ObjectModel {
  ObjectKind kind = ObjectKind::kElasticCable;
  double half_width = 0.01;      // w, m
  double tangent_scale = 0.25;   // tau, m
  double rigid_fraction = 0.4;   // rho, nh-beam only
  double length = 0.3;           // rigid-box long side; nh-beam core is rho * length
  double box_width = 0.06;       // rigid-box short side
  double pixels_per_meter = 500.0;
  Point2 image_offset{320.0, 240.0};
  std::size_t centerline_samples = 400;
  std::size_t cap_samples = 24;

  // Throws InvalidConfiguration on non-positive sizes or scale.
  void validate() const;
};

// Explicit Euler step r + u dt, angles re-wrapped. For a rigid box the
// gripper positions are then moved symmetrically so their distance equals
// the box length.
GripperState plant_step(const GripperState& r, const Vec6& u, double dt, const ObjectModel& obj);

// Pixel contour of the object held at r, resampled to n points. Throws
// InvalidConfiguration when the grippers are closer than 2w.
Contour plant_observe(const GripperState& r, const ObjectModel& obj, std::size_t n);

// Central-difference estimate of d s / d r at r.
Mat10x6 probe_initial_jacobian(const GripperState& r, const ObjectModel& obj, double delta,
                               const CameraSpec& cam, std::size_t n);

}  // namespace shapeservo
