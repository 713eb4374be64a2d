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

#include "shapeservo/errors.hpp"
#include "shapeservo/signals.hpp"

using namespace shapeservo;

TEST_CASE("sig_vec") {
  Eigen::VectorXd x(3);
  x << -4.0, 0.0, 9.0;
  const auto y = sig_vec(x, 0.5);
  CHECK(y[0] == -2.0);
  CHECK(y[1] == 0.0);
  CHECK(y[2] == 3.0);
  const auto z = sig_vec(x, 1.0);
  CHECK(z == x);
}

TEST_CASE("diag_abs_pow") {
  Eigen::VectorXd x(2);
  x << 1.0, -2.0;
  const Eigen::VectorXd d = diag_abs_pow(x, 2.0).diagonal();
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 4.0);

  const Eigen::VectorXd zero = diag_abs_pow(Eigen::VectorXd::Zero(4), 0.3).diagonal();
  CHECK(zero.isZero(0.0));

  const Eigen::VectorXd four = Eigen::VectorXd::Constant(1, 4.0);
  CHECK(diag_abs_pow(four, 0.5).diagonal()[0] == 2.0);
}

TEST_CASE("smooth_sign") {
  Eigen::VectorXd x(3);
  x << -2.0, 0.0, 5.0;
  const auto hard = smooth_sign(x, {SignMode::kHard, 0.05});
  CHECK(hard[0] == -1.0);
  CHECK(hard[1] == 0.0);
  CHECK(hard[2] == 1.0);

  const auto soft = smooth_sign(x, {SignMode::kTanh, 0.05});
  CHECK(std::abs(soft[0] + 1.0) < 1e-6);
  CHECK(soft[1] == 0.0);
  CHECK(std::abs(soft[2] - 1.0) < 1e-6);

  CHECK(parse_sign_mode("hard") == SignMode::kHard);
  CHECK(parse_sign_mode("tanh") == SignMode::kTanh);
  CHECK_THROWS_AS(parse_sign_mode("soft"), Error);
}

TEST_CASE("derivative filter on a constant") {
  DerivativeFilter f(2, 0.2);
  Eigen::VectorXd x(2);
  x << 1.5, -3.0;
  DerivativeFilter::Output out;
  for (int k = 0; k < 10; ++k) out = f.update(x, 0.02 * k);
  CHECK(out.rate.isZero(1e-12));
  CHECK(out.accel.isZero(1e-12));
}

TEST_CASE("derivative filter on a ramp") {
  DerivativeFilter f(1, 0.0);
  DerivativeFilter::Output out;
  for (int k = 0; k < 3; ++k) {
    CHECK(!f.warm());
    out = f.update(Eigen::VectorXd::Constant(1, 2.5 * 0.02 * k), 0.02 * k);
  }
  CHECK(f.warm());
  for (int k = 3; k < 20; ++k) {
    out = f.update(Eigen::VectorXd::Constant(1, 2.5 * 0.02 * k), 0.02 * k);
    CHECK(out.rate[0] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::abs(out.accel[0]) < 1e-9);
  }
}

TEST_CASE("derivative filter on a sine") {
  DerivativeFilter f(1, 0.0);
  const double dt = 0.02;
  for (int k = 0; k < 500; ++k) {
    const double t = dt * k;
    const auto out = f.update(Eigen::VectorXd::Constant(1, std::sin(t)), t);
    if (k >= 3) CHECK(std::abs(out.rate[0] - std::cos(t)) < 0.02);
  }
}

TEST_CASE("outputs stay zero before warm-up") {
  DerivativeFilter f(1, 0.0);
  auto a = f.update(Eigen::VectorXd::Constant(1, 0.0), 0.0);
  auto b = f.update(Eigen::VectorXd::Constant(1, 5.0), 0.1);
  CHECK(a.rate[0] == 0.0);
  CHECK(b.rate[0] == 0.0);
  CHECK(b.accel[0] == 0.0);
}

TEST_CASE("timestamps must increase") {
  DerivativeFilter f(1, 0.2);
  f.update(Eigen::VectorXd::Zero(1), 1.0);
  CHECK_THROWS_AS(f.update(Eigen::VectorXd::Zero(1), 1.0), Error);
  CHECK_THROWS_AS(f.update(Eigen::VectorXd::Zero(1), 0.5), Error);
}

TEST_CASE("saturation") {
  Vec6 u;
  u << 0.01, -0.02, 0.1, 0.0, 0.05, -0.15;
  CHECK(saturate(u, {}) == u);

  Vec6 big;
  big << 1, 0, 0, 0, 0, -1;
  Vec6 expected;
  expected << 0.06, 0, 0, 0, 0, -0.2;
  CHECK(saturate(big, {}) == expected);

  Vec6 all = Vec6::Constant(-5.0);
  const auto s = saturate(all, {});
  for (int i : {0, 1, 3, 4}) CHECK(s[i] == -0.06);
  for (int i : {2, 5}) CHECK(s[i] == -0.2);
}
