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

#include <Eigen/Core>

#include "shapeservo/estimation.hpp"
#include "shapeservo/signals.hpp"

namespace shapeservo {

struct EstimatorSettings {
  EstimatorMethod method = EstimatorMethod::kFtsmc;
  RlsParams rls;
  LkfParams lkf;
  double k2 = 1.0;      // K2 = k2 * I
  double chi = 1.0;
  double gamma = 0.1;
  double eps2 = 0.05;
  double alpha2 = 0.5;
  double beta2 = 0.5;
  double p2 = 1.5;
  double q2 = 2.0;
  SignSpec sign;
  AdaptiveGuards guards;
  double filter_pole = 0.2;
  double beta0 = kInitialBetaHat;
};

// Per-tick quantities derived from one feature observation.
struct EstimatorSignals {
  Eigen::VectorXd s_dot;
  Eigen::VectorXd s_ddot;
  Eigen::VectorXd e2;
  Eigen::VectorXd e2_dot;
  Eigen::VectorXd e2_ddot;
  Eigen::VectorXd sigma2;
};

// Drives one Jacobian estimator from sampled features and applied commands.
// Each tick: observe() the new features, adapt() once, then record_applied()
// the command sent to the plant. e2 compares the measured feature rate with
// the prediction for the last applied command, the one that produced it.
class OnlineJacobian {
 public:
  OnlineJacobian(const EstimatorSettings& settings, Eigen::MatrixXd j0);

  const EstimatorSignals& observe(const Eigen::Ref<const Eigen::VectorXd>& s,
                                  const Eigen::Ref<const Eigen::VectorXd>& r, double t);

  // beta update followed by the method's Jacobian update. sigma1 only enters
  // the terminal law.
  UpdateStatus adapt(const Eigen::Ref<const Eigen::VectorXd>& sigma1, double dt);

  void record_applied(const Eigen::Ref<const Eigen::VectorXd>& u, double t);

  const JacobianEstimate& estimate() const { return est_; }
  const EstimatorSignals& signals() const { return sig_; }
  const EstimatorSettings& settings() const { return settings_; }

 private:
  EstimatorSettings settings_;
  JacobianEstimate est_;
  DerivativeFilter s_filter_;
  DerivativeFilter e2_filter_;
  DerivativeFilter u_filter_;
  EstimatorSignals sig_;
  Eigen::VectorXd u_last_;
  Eigen::VectorXd u_rate_;
  std::optional<Eigen::VectorXd> s_prev_;
  std::optional<Eigen::VectorXd> r_prev_;
  Eigen::VectorXd s_cur_;
  Eigen::VectorXd r_cur_;
};

}  // namespace shapeservo
