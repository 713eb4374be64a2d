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

#include <doctest.h>

#include <cmath>
#include <random>

#include "shapeservo/errors.hpp"
#include "shapeservo/moments.hpp"
#include "shapeservo/plant.hpp"

using namespace shapeservo;

namespace {

Vec6 pose(double x1, double y1, double t1, double x2, double y2, double t2) {
  Vec6 r;
  r << x1, y1, t1, x2, y2, t2;
  return r;
}

ObjectModel model(ObjectKind kind) {
  ObjectModel m;
  m.kind = kind;
  return m;
}

}  // namespace

TEST_CASE("object names") {
  for (auto k : {ObjectKind::kElasticCable, ObjectKind::kRigidBox, ObjectKind::kNhBeam}) {
    CHECK(parse_object_kind(object_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_object_kind("sponge"), Error);
}

TEST_CASE("euler step") {
  const auto obj = model(ObjectKind::kElasticCable);
  const auto r = GripperState::make(pose(-0.15, 0, 0.4, 0.15, 0, -0.2));
  CHECK(plant_step(r, Vec6::Zero(), 0.1, obj).r == r.r);

  Vec6 u = Vec6::Zero();
  u[0] = 0.06;
  const auto next = plant_step(r, u, 0.1, obj);
  CHECK(next.r[0] - r.r[0] == doctest::Approx(0.006));

  Vec6 spin = Vec6::Zero();
  spin[2] = 10.0;
  const auto wrapped = plant_step(GripperState::make(pose(0, 0, 3.0, 1, 0, 0)), spin, 0.1, obj);
  CHECK(wrapped.r[2] == doctest::Approx(4.0 - 2.0 * M_PI));
}

TEST_CASE("rigid box keeps its length") {
  const auto obj = model(ObjectKind::kRigidBox);
  const auto r = GripperState::make(pose(-0.15, 0, 0, 0.15, 0, 0));
  Vec6 u;
  u << -0.06, 0.01, 0.0, 0.06, -0.02, 0.0;
  auto s = r;
  for (int k = 0; k < 50; ++k) {
    s = plant_step(s, u, 0.02, obj);
    CHECK(std::hypot(s.r[3] - s.r[0], s.r[4] - s.r[1]) == doctest::Approx(obj.length).epsilon(1e-9));
  }
}

TEST_CASE("observation is deterministic and sized") {
  for (auto kind : {ObjectKind::kElasticCable, ObjectKind::kRigidBox, ObjectKind::kNhBeam}) {
    const auto obj = model(kind);
    const auto r = GripperState::make(pose(-0.15, 0.02, 0.4, 0.15, -0.01, -0.2));
    const auto a = plant_observe(r, obj, 300);
    const auto b = plant_observe(r, obj, 300);
    CHECK(a.size() == 300);
    CHECK(a == b);
  }
}

TEST_CASE("mirrored grippers give a mirrored contour") {
  for (auto kind : {ObjectKind::kElasticCable, ObjectKind::kNhBeam}) {
    const auto obj = model(kind);
    const auto r = GripperState::make(pose(-0.14, 0.05, 0.5, 0.14, 0.05, -0.5));
    const auto m = raw_moments(plant_observe(r, obj, 300));
    const auto dense = raw_moments(plant_observe(r, obj, 4000));
    CHECK(std::abs(dense.u_bar - 320.0) < 1e-6 * 320.0);
    CHECK(std::abs(m.u_bar - 320.0) < 1e-3);
    // Odd-in-u central moments vanish for a shape symmetric about u = u_bar.
    const double scale = dense.central(2, 0);
    CHECK(std::abs(dense.central(1, 1)) < 1e-6 * scale);
    const double scale3 = std::pow(scale, 1.5);
    CHECK(std::abs(dense.central(3, 0)) < 1e-6 * scale3);
    CHECK(std::abs(dense.central(1, 2)) < 1e-6 * scale3);
  }
}

TEST_CASE("rigid box invariants do not depend on pose") {
  const auto obj = model(ObjectKind::kRigidBox);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-0.2, 0.2), ang(-M_PI, M_PI);
  const auto ref = hu_invariants(raw_moments(plant_observe(
      GripperState::make(pose(-0.15, 0, 0, 0.15, 0, 0)), obj, 300)));
  for (int k = 0; k < 100; ++k) {
    const double cx = pos(rng), cy = pos(rng), a = ang(rng);
    const double hx = 0.5 * obj.length * std::cos(a), hy = 0.5 * obj.length * std::sin(a);
    const auto r = GripperState::make(pose(cx - hx, cy - hy, 0, cx + hx, cy + hy, 0));
    const auto phi = hu_invariants(raw_moments(plant_observe(r, obj, 300)));
    for (int i = 0; i < 7; ++i) {
      CHECK(std::abs(phi[i] - ref[i]) <= 1e-9 * std::max(std::abs(ref[i]), 1.0));
    }
  }
}

TEST_CASE("grippers too close") {
  for (auto kind : {ObjectKind::kElasticCable, ObjectKind::kRigidBox, ObjectKind::kNhBeam}) {
    const auto r = GripperState::make(pose(0, 0, 0, 0.005, 0, 0));
    CHECK_THROWS_AS(plant_observe(r, model(kind), 300), InvalidConfiguration);
  }
}

TEST_CASE("model validation") {
  ObjectModel m;
  m.half_width = 0.0;
  CHECK_THROWS_AS(m.validate(), InvalidConfiguration);
  ObjectModel n;
  n.pixels_per_meter = -1.0;
  CHECK_THROWS_AS(n.validate(), InvalidConfiguration);
  CHECK_NOTHROW(ObjectModel{}.validate());
}

TEST_CASE("probed jacobian is repeatable and smooth") {
  const CameraSpec cam;
  for (auto kind : {ObjectKind::kElasticCable, ObjectKind::kNhBeam}) {
    CAPTURE(object_kind_name(kind));
    const auto obj = model(kind);
    const auto r = GripperState::make(pose(-0.15, 0, 0.4, 0.15, 0, -0.2));
    const Mat10x6 a = probe_initial_jacobian(r, obj, 1e-3, cam, 300);
    CHECK(a == probe_initial_jacobian(r, obj, 1e-3, cam, 300));
    CHECK(a.allFinite());

    // Richardson ratio, about 4 for a smooth map.
    const Mat10x6 b = probe_initial_jacobian(r, obj, 5e-4, cam, 300);
    const Mat10x6 c = probe_initial_jacobian(r, obj, 2.5e-4, cam, 300);
    const double ratio = (a - b).norm() / (b - c).norm();
    CHECK(ratio > 2.5);
  }
}
