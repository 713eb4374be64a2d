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

#include <Eigen/LU>

#include "shapeservo/control.hpp"
#include "shapeservo/errors.hpp"

using namespace shapeservo;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Eigen::MatrixXd padded_identity() {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(10, 6);
  j.topRows(6).setIdentity();
  return j;
}

}  // namespace

TEST_CASE("damped pseudo-inverse") {
  Eigen::MatrixXd j(3, 2);
  j << 1, 2, 3, 4, 5, 6;
  const Eigen::MatrixXd exact = (j.transpose() * j).inverse() * j.transpose();
  CHECK((damped_pinv(j, 0.0) - exact).norm() < 1e-12);
  CHECK((damped_pinv(j, 1e-9) - exact).norm() < 1e-6);
  CHECK((damped_pinv(j, 1e-6) * j - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-4);

  const Eigen::MatrixXd zero = damped_pinv(Eigen::MatrixXd::Zero(4, 2), 1e-6);
  CHECK(zero.allFinite());
  CHECK(zero.isZero(0.0));
}

TEST_CASE("terminal gains validation") {
  CHECK_NOTHROW(TerminalGains(0.5, 0.5, 1.5, 2.0, 0.05));
  CHECK_THROWS_AS(TerminalGains(0.5, 0.5, 1.0, 2.0, 0.05), Error);
  CHECK_THROWS_AS(TerminalGains(0.5, 0.5, 2.0, 2.5, 0.05), Error);
  CHECK_THROWS_AS(TerminalGains(0.5, 0.5, 1.5, 1.5, 0.05), Error);
  CHECK_THROWS_AS(TerminalGains(0.0, 0.5, 1.5, 2.0, 0.05), Error);
  CHECK_THROWS_AS(TerminalGains(0.5, 0.5, 1.5, 2.0, -1.0), Error);
}

TEST_CASE("linear surface") {
  const Eigen::MatrixXd k = 2.0 * Eigen::MatrixXd::Identity(10, 10);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(10), ed = Eigen::VectorXd::Zero(10);
  CHECK(surface_linear(e, ed, k).isZero(0.0));
  e[0] = 1.0;
  ed[0] = 0.5;
  CHECK(surface_linear(e, ed, k)[0] == 2.5);

  const Eigen::VectorXd x = vec({0.3, -0.2, 1.0});
  CHECK(surface_linear(x, -x, Eigen::MatrixXd::Identity(3, 3)).isZero(0.0));
}

TEST_CASE("terminal surface") {
  const TerminalGains g(1.0, 1.0, 1.5, 2.0, 0.05);
  CHECK(surface_terminal(vec({0.0}), vec({0.0}), g)[0] == 0.0);
  CHECK(surface_terminal(vec({1.0}), vec({-1.0}), g)[0] == doctest::Approx(1.0));

  const TerminalGains h(0.5, 0.7, 1.3, 1.9, 0.05);
  const Eigen::VectorXd e = vec({0.4, -1.2, 0.0}), ed = vec({-0.3, 0.8, 2.0});
  CHECK((surface_terminal(-e, -ed, h) + surface_terminal(e, ed, h)).norm() < 1e-15);
}

TEST_CASE("classical law") {
  const auto j = padded_identity();
  CHECK(control_classical(Eigen::VectorXd::Zero(10), j, 0.8).isZero(0.0));

  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(10);
  e1.head(6) << 0.1, -0.2, 0.3, -0.4, 0.5, -0.6;
  const Eigen::VectorXd u = control_classical(e1, j, 0.8, 1e-12);
  CHECK((u + 0.8 * e1.head(6)).norm() < 1e-9);
}

TEST_CASE("linear sliding-mode law") {
  const auto j = padded_identity();
  const Eigen::MatrixXd k1 = 0.8 * Eigen::MatrixXd::Identity(10, 10);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(10);
  CHECK(control_lsmc(zero, zero, zero, j, k1).isZero(0.0));

  Eigen::VectorXd e1 = zero;
  e1.head(6) << 0.1, -0.2, 0.3, -0.4, 0.5, -0.6;
  const Eigen::VectorXd sigma1 = surface_linear(e1, zero, k1);
  const Eigen::VectorXd u = control_lsmc(sigma1, zero, zero, j, k1, 1e-12);
  CHECK((u - -damped_pinv(j, 1e-12) * e1).norm() < 1e-9);
}

TEST_CASE("terminal law at the origin") {
  const auto j = padded_identity();
  const TerminalGains g(0.5, 0.5, 1.5, 2.0, 0.1);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(10);
  for (auto mode : {SignMode::kTanh, SignMode::kHard}) {
    const Eigen::VectorXd sigma1 = surface_terminal(zero, zero, g);
    const Eigen::VectorXd u = control_ftsmc(sigma1, zero, zero, zero, zero, j, g, {mode, 0.05});
    CHECK(u.allFinite());
    CHECK(u.isZero(0.0));
  }
}

TEST_CASE("terminal law stays bounded near the origin") {
  const auto j = padded_identity();
  const TerminalGains g(0.5, 0.5, 1.5, 2.0, 0.1);
  for (double scale : {1e-3, 1e-6, 1e-9, 1e-12}) {
    Eigen::VectorXd e = Eigen::VectorXd::Constant(10, scale), ed = Eigen::VectorXd::Constant(10, -scale);
    const Eigen::VectorXd sigma1 = surface_terminal(e, ed, g);
    const Eigen::VectorXd u =
        control_ftsmc(sigma1, e, ed, Eigen::VectorXd::Zero(10), Eigen::VectorXd::Zero(10), j, g, {});
    CHECK(u.allFinite());
    CHECK(u.norm() < 1.0);
  }
}

TEST_CASE("implicit e1'' matches the command it produces") {
  const Eigen::MatrixXd j = Eigen::MatrixXd::Identity(6, 6);
  const Eigen::VectorXd e1 = vec({0.1, -0.05, 0.2, 0.0, -0.3, 0.04});
  const Eigen::VectorXd e1_dot = vec({-0.02, 0.01, 0.0, 0.03, 0.05, -0.01});
  const Eigen::VectorXd sd = Eigen::VectorXd::Zero(6);
  const double dt = 0.02;

  SUBCASE("linear") {
    const Eigen::MatrixXd k1 = 0.8 * Eigen::MatrixXd::Identity(6, 6);
    const Eigen::VectorXd sigma1 = surface_linear(e1, e1_dot, k1);
    const Eigen::VectorXd x = lsmc_implicit_e1_ddot(sigma1, sd, e1_dot, k1, dt);
    const Eigen::VectorXd u = control_lsmc(sigma1, sd, x, j, k1, 0.0);
    CHECK((u - (e1_dot + dt * x)).norm() < 1e-12);
  }
  SUBCASE("terminal") {
    const TerminalGains g(0.5, 0.5, 1.5, 2.0, 0.1);
    const SignSpec sign{SignMode::kTanh, 0.05};
    const Eigen::VectorXd sigma1 = surface_terminal(e1, e1_dot, g);
    const Eigen::VectorXd x = ftsmc_implicit_e1_ddot(sigma1, e1, e1_dot, sd, g, sign, dt);
    const Eigen::VectorXd u = control_ftsmc(sigma1, e1, e1_dot, x, sd, j, g, sign, 0.0);
    CHECK((u - (e1_dot + dt * x)).norm() < 1e-12);
  }
}
