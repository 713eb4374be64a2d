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

#include <string_view>

#include <Eigen/Core>

#include "shapeservo/signals.hpp"

namespace shapeservo {

inline constexpr double kDefaultDamping = 1e-6;

// J^T (J J^T + mu I)^{-1}, evaluated as (J^T J + mu I)^{-1} J^T.
Eigen::MatrixXd damped_pinv(const Eigen::Ref<const Eigen::MatrixXd>& j, double mu);

// Parameters of a nonsingular terminal sliding surface and its reaching
// term. The constructor rejects p outside (1, 2), q <= p and non-positive
// gains.
class TerminalGains {
 public:
  TerminalGains(double alpha, double beta, double p, double q, double eps);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double p() const { return p_; }
  double q() const { return q_; }
  double eps() const { return eps_; }

 private:
  double alpha_, beta_, p_, q_, eps_;
};

enum class SurfaceMode { kLinear, kTerminal };

// sigma = K e + e'. K must be symmetric positive definite.
Eigen::VectorXd surface_linear(const Eigen::Ref<const Eigen::VectorXd>& e,
                               const Eigen::Ref<const Eigen::VectorXd>& e_dot,
                               const Eigen::Ref<const Eigen::MatrixXd>& k);

// sigma = e + alpha sig^p(e') + beta sig^q(e).
Eigen::VectorXd surface_terminal(const Eigen::Ref<const Eigen::VectorXd>& e,
                                 const Eigen::Ref<const Eigen::VectorXd>& e_dot,
                                 const TerminalGains& g);

// u = -lambda J^+ e1.
Eigen::VectorXd control_classical(const Eigen::Ref<const Eigen::VectorXd>& e1,
                                  const Eigen::Ref<const Eigen::MatrixXd>& jhat, double lambda,
                                  double mu = kDefaultDamping);

// u = J^+ K1^{-1} (-sigma1 + K1 s_d' - e1'').
Eigen::VectorXd control_lsmc(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                             const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                             const Eigen::Ref<const Eigen::VectorXd>& e1_ddot,
                             const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                             const Eigen::Ref<const Eigen::MatrixXd>& k1,
                             double mu = kDefaultDamping);

// u = J^+ (-a1 p1 |e1'|^{p1-1} e1'' - eps1 sgn(sigma1) - b1 q1 |e1|^{q1-1} e1' + s_d').
// Every exponent is non-negative, so u stays bounded as the errors vanish.
Eigen::VectorXd control_ftsmc(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                              const Eigen::Ref<const Eigen::VectorXd>& e1,
                              const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                              const Eigen::Ref<const Eigen::VectorXd>& e1_ddot,
                              const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                              const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                              const TerminalGains& g, const SignSpec& sign,
                              double mu = kDefaultDamping);

// The LSMC and FTSMC laws consume e1'', which the command being computed
// itself produces. These return the e1'' for which the feature rate the law
// requests one step ahead, e1'(t + dt), is consistent with
// e1'' = (e1'(t + dt) - e1') / dt.
Eigen::VectorXd lsmc_implicit_e1_ddot(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                                      const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                                      const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                                      const Eigen::Ref<const Eigen::MatrixXd>& k1, double dt);
Eigen::VectorXd ftsmc_implicit_e1_ddot(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                                       const Eigen::Ref<const Eigen::VectorXd>& e1,
                                       const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                                       const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                                       const TerminalGains& g, const SignSpec& sign, double dt);

}  // namespace shapeservo
