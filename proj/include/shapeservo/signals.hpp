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

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "shapeservo/types.hpp"

namespace shapeservo {

// Component-wise |x_i|^k sign(x_i).
Eigen::VectorXd sig_vec(const Eigen::Ref<const Eigen::VectorXd>& x, double k);

// diag(|x_i|^k); zero entries stay zero for every k > 0.
Eigen::DiagonalMatrix<double, Eigen::Dynamic> diag_abs_pow(const Eigen::Ref<const Eigen::VectorXd>& x,
                                                           double k);

enum class SignMode { kHard, kTanh };

SignMode parse_sign_mode(std::string_view name);

struct SignSpec {
  SignMode mode = SignMode::kTanh;
  double eps = 0.05;  // tanh slope, used in kTanh mode
};

// hard: sign(x_i) with sign(0) = 0; tanh: tanh(x_i / eps).
Eigen::VectorXd smooth_sign(const Eigen::Ref<const Eigen::VectorXd>& x, const SignSpec& spec);

// Online first and second derivative of a sampled vector signal: first-order
// low-pass followed by backward differences. Outputs are zero until three
// samples have been seen.
class DerivativeFilter {
 public:
  struct Output {
    Eigen::VectorXd rate;
    Eigen::VectorXd accel;
  };

  DerivativeFilter(int dim, double pole);

  // Throws Error if t does not increase strictly.
  Output update(const Eigen::Ref<const Eigen::VectorXd>& sample, double t);

  int samples() const { return count_; }
  bool warm() const { return count_ >= 3; }
  double pole() const { return pole_; }

 private:
  int dim_;
  double pole_;
  int count_ = 0;
  double last_t_ = 0.0;
  Eigen::VectorXd filtered_;
  Eigen::VectorXd rate_;
};

struct SaturationSpec {
  double linear = 0.06;   // m/s
  double angular = 0.2;   // rad/s
};

// Component-wise clamp: |u_i1|, |u_i2| <= linear, |u_i3| <= angular.
Vec6 saturate(const Vec6& u, const SaturationSpec& spec);

}  // namespace shapeservo
