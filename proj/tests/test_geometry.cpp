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
#include <numbers>
#include <sstream>

#include "shapeservo/errors.hpp"
#include "shapeservo/geometry.hpp"

using namespace shapeservo;

namespace {

Contour unit_square() { return Contour({0, 1, 1, 0}, {0, 0, 1, 1}); }

}  // namespace

TEST_CASE("arc lengths of the unit square") {
  const auto dm = arc_lengths(unit_square());
  REQUIRE(dm.size() == 4);
  for (double d : dm) CHECK(d == 1.0);
  CHECK(perimeter(unit_square()) == 4.0);
}

TEST_CASE("arc lengths survive rigid motion") {
  const Contour c({0.3, 2.1, 1.7, -0.4, -1.2}, {0.1, 0.5, 2.2, 1.9, 0.8});
  const auto t = RigidTransform2D::make({5.0, -3.0}, 0.77);
  const auto a = arc_lengths(c);
  const auto b = arc_lengths(apply_rigid(c, t));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-12));
}

TEST_CASE("repeated point gives a zero segment") {
  const Contour c({0, 1, 1, 1, 0}, {0, 0, 1, 1, 1});
  const auto dm = arc_lengths(c);
  CHECK(dm[3] == 0.0);
  CHECK(perimeter(c) == 4.0);
}

TEST_CASE("zero perimeter is rejected") {
  const Contour c({2, 2, 2}, {1, 1, 1});
  CHECK_THROWS_AS(arc_lengths(c), DegenerateContour);
  CHECK_THROWS_AS(resample_closed(c, 10), DegenerateContour);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Contour({0, 1}, {0, 1}), DegenerateContour);
  CHECK_THROWS_AS(Contour({0, 1, 2}, {0, 1}), DegenerateContour);
  CHECK_THROWS_AS(Contour({0, NAN, 2}, {0, 1, 2}), DegenerateContour);
}

TEST_CASE("resampling the unit square to eight points") {
  const auto r = resample_closed(unit_square(), 8);
  REQUIRE(r.size() == 8);
  for (double d : arc_lengths(r)) CHECK(d == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r[0].u == 0.0);
  CHECK(r[0].v == 0.0);
  CHECK(r[1].u == doctest::Approx(0.5));
  CHECK(r[3].v == doctest::Approx(0.5));
}

TEST_CASE("resampling a uniform contour is idempotent") {
  std::vector<double> u, v;
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 64;
    u.push_back(std::cos(a));
    v.push_back(std::sin(a));
  }
  const Contour c(u, v);
  const auto r = resample_closed(c, 64);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(std::abs(r[i].u - c[i].u) < 1e-9);
    CHECK(std::abs(r[i].v - c[i].v) < 1e-9);
  }
  CHECK(resample_closed(c, 300).size() == 300);
}

TEST_CASE("rigid transform examples") {
  const Contour c({0, 1, 0}, {0, 0, 1});
  CHECK(apply_rigid(c, {}) == c);

  const auto shifted = apply_rigid(c, RigidTransform2D::make({5, -3}, 0));
  CHECK(shifted[0].u == 5.0);
  CHECK(shifted[0].v == -3.0);

  const auto turned = apply_rigid(c, RigidTransform2D::make({0, 0}, std::numbers::pi / 2));
  CHECK(std::abs(turned[1].u) < 1e-15);
  CHECK(turned[1].v == doctest::Approx(1.0));
}

TEST_CASE("angle wrapping") {
  CHECK(wrap_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(wrap_angle(3 * std::numbers::pi / 2) == doctest::Approx(-std::numbers::pi / 2));
  CHECK(wrap_angle(0.3) == 0.3);
}

TEST_CASE("rotated start keeps the point set") {
  const Contour c({0, 1, 1, 0}, {0, 0, 1, 1});
  const auto r = c.rotated_start(2);
  CHECK(r[0].u == 1.0);
  CHECK(r[0].v == 1.0);
  CHECK(r.size() == 4);
}

TEST_CASE("contour text format") {
  std::istringstream in("# square\n0 0\n1 0\n\n1 1\n0 1\n");
  const auto c = read_contour(in);
  CHECK(c == unit_square());

  std::istringstream bad("0 0\n1 x\n1 1\n");
  CHECK_THROWS_AS(read_contour(bad), Error);

  const auto f = read_contour_file(SHAPESERVO_TEST_DATA "/unit_square.txt");
  CHECK(f == unit_square());
}
