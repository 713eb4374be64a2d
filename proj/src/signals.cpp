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

#include "shapeservo/signals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shapeservo/errors.hpp"

namespace shapeservo {
namespace {

double sign_of(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

}  // namespace

Eigen::VectorXd sig_vec(const Eigen::Ref<const Eigen::VectorXd>& x, double k) {
  return x.unaryExpr([k](double v) { return std::pow(std::abs(v), k) * sign_of(v); });
}

Eigen::DiagonalMatrix<double, Eigen::Dynamic> diag_abs_pow(const Eigen::Ref<const Eigen::VectorXd>& x,
                                                           double k) {
  const Eigen::VectorXd d = x.unaryExpr([k](double v) { return v == 0.0 ? 0.0 : std::pow(std::abs(v), k); });
  return d.asDiagonal();
}

SignMode parse_sign_mode(std::string_view name) {
  if (name == "hard") return SignMode::kHard;
  if (name == "tanh") return SignMode::kTanh;
  throw Error("unknown sign mode '" + std::string(name) + "'");
}

Eigen::VectorXd smooth_sign(const Eigen::Ref<const Eigen::VectorXd>& x, const SignSpec& spec) {
  if (spec.mode == SignMode::kHard) return x.unaryExpr(&sign_of);
  const double eps = spec.eps;
  return x.unaryExpr([eps](double v) { return std::tanh(v / eps); });
}

DerivativeFilter::DerivativeFilter(int dim, double pole)
    : dim_(dim), pole_(pole), filtered_(Eigen::VectorXd::Zero(dim)), rate_(Eigen::VectorXd::Zero(dim)) {
  if (!(pole >= 0.0 && pole < 1.0)) throw Error("filter pole must lie in [0, 1)");
}

DerivativeFilter::Output DerivativeFilter::update(const Eigen::Ref<const Eigen::VectorXd>& sample,
                                                  double t) {
  if (sample.size() != dim_) throw Error("filter sample has wrong dimension");
  Output out{Eigen::VectorXd::Zero(dim_), Eigen::VectorXd::Zero(dim_)};
  if (count_ == 0) {
    filtered_ = sample;
    last_t_ = t;
    count_ = 1;
    return out;
  }
  if (!(t > last_t_)) throw Error("filter timestamps must increase strictly");
  const double dt = t - last_t_;
  const Eigen::VectorXd next = pole_ * filtered_ + (1.0 - pole_) * sample;
  const Eigen::VectorXd rate = (next - filtered_) / dt;
  const Eigen::VectorXd accel = (rate - rate_) / dt;
  filtered_ = next;
  last_t_ = t;
  ++count_;
  const bool warm = count_ >= 3;
  rate_ = rate;
  if (warm) {
    out.rate = rate;
    out.accel = accel;
  }
  return out;
}

Vec6 saturate(const Vec6& u, const SaturationSpec& spec) {
  Vec6 out;
  for (int i = 0; i < kPoseDim; ++i) {
    const double lim = (i % 3 == 2) ? spec.angular : spec.linear;
    out[i] = std::clamp(u[i], -lim, lim);
  }
  return out;
}

}  // namespace shapeservo
