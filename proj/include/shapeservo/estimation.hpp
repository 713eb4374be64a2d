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

#include <limits>
#include <string_view>

#include <Eigen/Core>

#include "shapeservo/signals.hpp"

namespace shapeservo {

enum class EstimatorMethod { kRls, kLkf, kLsmc, kFtsmc };

EstimatorMethod parse_estimator_method(std::string_view name);
std::string_view estimator_method_name(EstimatorMethod m);

struct RlsParams {
  double lambda = 0.98;  // forgetting factor
  double p0 = 10.0;      // P(0) = p0 * I
};

struct LkfParams {
  double q = 1e-6;       // process noise per entry
  double rho_m = 1e-4;   // measurement noise per feature
  double p0 = 1.0;       // P(0) = p0 * I
};

inline constexpr double kInitialBetaHat = 0.001;

// Online estimate of the deformation Jacobian plus the adaptive bound on its
// error. Dimensions are generic so small toy problems can exercise the same
// code; the servo loop uses 10 x 6.
struct JacobianEstimate {
  EstimatorMethod method = EstimatorMethod::kFtsmc;
  Eigen::MatrixXd jhat;
  double beta_hat = kInitialBetaHat;
  // RLS: cols x cols; LKF: (rows*cols) x (rows*cols); empty for the
  // sliding-mode laws.
  Eigen::MatrixXd covariance;
  RlsParams rls;
  LkfParams lkf;

  static JacobianEstimate make(EstimatorMethod method, Eigen::MatrixXd j0,
                               const RlsParams& rls = {}, const LkfParams& lkf = {});
};

enum class UpdateStatus { kApplied, kFrozen };

// Euler step of beta' = tanh(|u|^2/chi) |u|^2 - gamma beta, clamped at zero.
double beta_update(double beta_hat, const Eigen::Ref<const Eigen::VectorXd>& u, double chi,
                   double gamma, double dt);

// e2 = s_dot - J u.
Eigen::VectorXd estimation_error(const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                                 const Eigen::Ref<const Eigen::VectorXd>& s_dot,
                                 const Eigen::Ref<const Eigen::VectorXd>& u);

// Recursive least squares with exponential forgetting on (ds, dr) pairs.
// Skipped when |dr| <= min_excitation.
UpdateStatus rls_update(JacobianEstimate& est, const Eigen::Ref<const Eigen::VectorXd>& ds,
                        const Eigen::Ref<const Eigen::VectorXd>& dr, double min_excitation);

// Kalman filter on vec(J) with random-walk process model and measurement
// ds = (dr^T kron I) vec(J). Skipped when |dr| <= min_excitation.
UpdateStatus lkf_update(JacobianEstimate& est, const Eigen::Ref<const Eigen::VectorXd>& ds,
                        const Eigen::Ref<const Eigen::VectorXd>& dr, double min_excitation);

// Signals consumed by the sliding-mode adaptive laws.
struct AdaptiveSignals {
  Eigen::VectorXd s_ddot;
  Eigen::VectorXd u;
  Eigen::VectorXd u_dot;
  Eigen::VectorXd e2;
  Eigen::VectorXd e2_dot;
  Eigen::VectorXd e2_ddot;
  Eigen::VectorXd sigma1;
  Eigen::VectorXd sigma2;
};

struct AdaptiveGuards {
  double eps_u = 1e-6;       // freeze below this |u|
  double eps_sigma = 1e-9;   // drop the sigma2^{T+} robust term below this |sigma2|
  // Upper bound on the robust term's gain / |sigma2|^2. The online driver
  // sets 1/dt so one Euler step cannot push sigma2 past the surface.
  double robust_cap = std::numeric_limits<double>::infinity();
};

struct LsmcEstimatorGains {
  Eigen::MatrixXd k2;  // SPD
  double chi = 1.0;
};

struct FtsmcEstimatorGains {
  double eps2 = 0.05;
  double alpha2 = 0.5;
  double beta2 = 0.5;
  double p2 = 1.5;
  double q2 = 2.0;
  double chi = 1.0;
  SignSpec sign;
};

// Rate of the linear sliding-mode law:
//   J' = (s'' - J u' - K2^{-1} w) u^+,
//   w  = -sigma2 - e2'' - sigma2^{T+} tanh(|u|^2/chi) beta |u|^2.
// Returns a zero matrix when |u| <= eps_u.
Eigen::MatrixXd lsmc_jacobian_rate(const JacobianEstimate& est, const AdaptiveSignals& in,
                                   const LsmcEstimatorGains& gains, const AdaptiveGuards& guards);

// Rate of the terminal sliding-mode law:
//   J' = (s'' - J u' + eps2 sgn(sigma2) + w + a2 p2 |e2'|^{p2-1} e2''
//         + b2 q2 |e2|^{q2-1} e2') u^+,
//   w  = sigma2^{T+} (tanh(|u|^2/chi) beta |u|^2 + |sigma1|^2 / 4).
Eigen::MatrixXd ftsmc_jacobian_rate(const JacobianEstimate& est, const AdaptiveSignals& in,
                                    const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards);

// The laws contain e2'', which itself depends on the update being computed.
// These return the e2'' for which one Euler step of length dt is
// self-consistent: e2'' = (e2'(t + dt) - e2') / dt with e2'(t + dt) the rate
// the law imposes. in.e2_ddot is ignored.
Eigen::VectorXd lsmc_implicit_e2_ddot(const JacobianEstimate& est, const AdaptiveSignals& in,
                                      const LsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                      double dt);
Eigen::VectorXd ftsmc_implicit_e2_ddot(const JacobianEstimate& est, const AdaptiveSignals& in,
                                       const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                       double dt);

// Euler steps of the rates above. Throw EstimatorDiverged on a non-finite
// result.
UpdateStatus lsmc_jacobian_update(JacobianEstimate& est, const AdaptiveSignals& in,
                                  const LsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                  double dt);
UpdateStatus ftsmc_jacobian_update(JacobianEstimate& est, const AdaptiveSignals& in,
                                   const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                   double dt);

}  // namespace shapeservo
