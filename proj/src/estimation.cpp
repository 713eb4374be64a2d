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

#include "shapeservo/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "shapeservo/errors.hpp"

namespace shapeservo {
namespace {

void require_finite(const JacobianEstimate& est) {
  if (!est.jhat.allFinite() || !std::isfinite(est.beta_hat) ||
      (est.covariance.size() > 0 && !est.covariance.allFinite())) {
    throw EstimatorDiverged();
  }
}

void symmetrize(Eigen::MatrixXd& p) {
  const Eigen::MatrixXd sym = 0.5 * (p + p.transpose());
  p = sym;
}

// sigma2 / |sigma2|^2 scaled by `gain`, or zero on the surface.
Eigen::VectorXd robust_term(const Eigen::VectorXd& sigma2, double gain, const AdaptiveGuards& guards) {
  const double n = sigma2.norm();
  if (n <= guards.eps_sigma) return Eigen::VectorXd::Zero(sigma2.size());
  return sigma2 * std::min(gain / (n * n), guards.robust_cap);
}

}  // namespace

EstimatorMethod parse_estimator_method(std::string_view name) {
  if (name == "rls" || name == "RLS") return EstimatorMethod::kRls;
  if (name == "lkf" || name == "LKF") return EstimatorMethod::kLkf;
  if (name == "lsmc" || name == "LSMC") return EstimatorMethod::kLsmc;
  if (name == "ftsmc" || name == "FTSMC") return EstimatorMethod::kFtsmc;
  throw Error("unknown estimator method '" + std::string(name) + "'");
}

std::string_view estimator_method_name(EstimatorMethod m) {
  switch (m) {
    case EstimatorMethod::kRls:
      return "rls";
    case EstimatorMethod::kLkf:
      return "lkf";
    case EstimatorMethod::kLsmc:
      return "lsmc";
    case EstimatorMethod::kFtsmc:
      return "ftsmc";
  }
  return "unknown";
}

JacobianEstimate JacobianEstimate::make(EstimatorMethod method, Eigen::MatrixXd j0,
                                        const RlsParams& rls, const LkfParams& lkf) {
  JacobianEstimate est;
  est.method = method;
  est.rls = rls;
  est.lkf = lkf;
  const auto cols = j0.cols();
  const auto entries = j0.size();
  est.jhat = std::move(j0);
  if (method == EstimatorMethod::kRls) {
    est.covariance = rls.p0 * Eigen::MatrixXd::Identity(cols, cols);
  } else if (method == EstimatorMethod::kLkf) {
    est.covariance = lkf.p0 * Eigen::MatrixXd::Identity(entries, entries);
  }
  require_finite(est);
  return est;
}

double beta_update(double beta_hat, const Eigen::Ref<const Eigen::VectorXd>& u, double chi,
                   double gamma, double dt) {
  const double u2 = u.squaredNorm();
  const double rate = std::tanh(u2 / chi) * u2 - gamma * beta_hat;
  return std::max(0.0, beta_hat + dt * rate);
}

Eigen::VectorXd estimation_error(const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                                 const Eigen::Ref<const Eigen::VectorXd>& s_dot,
                                 const Eigen::Ref<const Eigen::VectorXd>& u) {
  return s_dot - jhat * u;
}

UpdateStatus rls_update(JacobianEstimate& est, const Eigen::Ref<const Eigen::VectorXd>& ds,
                        const Eigen::Ref<const Eigen::VectorXd>& dr, double min_excitation) {
  if (dr.norm() <= min_excitation) return UpdateStatus::kFrozen;
  Eigen::MatrixXd& p = est.covariance;
  const double lambda = est.rls.lambda;
  const Eigen::VectorXd pdr = p * dr;
  const Eigen::VectorXd gain = pdr / (lambda + dr.dot(pdr));
  est.jhat += (ds - est.jhat * dr) * gain.transpose();
  p = (p - gain * pdr.transpose()) / lambda;
  symmetrize(p);
  require_finite(est);
  return UpdateStatus::kApplied;
}

UpdateStatus lkf_update(JacobianEstimate& est, const Eigen::Ref<const Eigen::VectorXd>& ds,
                        const Eigen::Ref<const Eigen::VectorXd>& dr, double min_excitation) {
  if (dr.norm() <= min_excitation) return UpdateStatus::kFrozen;
  const auto m = est.jhat.rows();
  const auto n = est.jhat.cols();
  Eigen::MatrixXd& p = est.covariance;
  p.diagonal().array() += est.lkf.q;

  // H = dr^T kron I_m.
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m * n);
  for (Eigen::Index j = 0; j < n; ++j) h.block(0, j * m, m, m).diagonal().setConstant(dr[j]);

  const Eigen::MatrixXd r = est.lkf.rho_m * Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd pht = p * h.transpose();
  const Eigen::MatrixXd s = h * pht + r;
  const Eigen::MatrixXd k = s.ldlt().solve(pht.transpose()).transpose();

  const Eigen::VectorXd innovation = ds - est.jhat * dr;
  Eigen::Map<Eigen::VectorXd> x(est.jhat.data(), m * n);
  x += k * innovation;

  // Joseph form keeps P positive semidefinite.
  Eigen::MatrixXd ikh = -k * h;
  ikh.diagonal().array() += 1.0;
  p = ikh * p * ikh.transpose() + k * r * k.transpose();
  symmetrize(p);
  require_finite(est);
  return UpdateStatus::kApplied;
}

Eigen::MatrixXd lsmc_jacobian_rate(const JacobianEstimate& est, const AdaptiveSignals& in,
                                   const LsmcEstimatorGains& gains, const AdaptiveGuards& guards) {
  const double u2 = in.u.squaredNorm();
  if (std::sqrt(u2) <= guards.eps_u) return Eigen::MatrixXd::Zero(est.jhat.rows(), est.jhat.cols());
  const double robust_gain = std::tanh(u2 / gains.chi) * est.beta_hat * u2;
  const Eigen::VectorXd w =
      -in.sigma2 - in.e2_ddot - robust_term(in.sigma2, robust_gain, guards);
  const Eigen::VectorXd k2_inv_w = gains.k2.llt().solve(w);
  const Eigen::VectorXd lhs = in.s_ddot - est.jhat * in.u_dot - k2_inv_w;
  return lhs * (in.u.transpose() / u2);
}

Eigen::MatrixXd ftsmc_jacobian_rate(const JacobianEstimate& est, const AdaptiveSignals& in,
                                    const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards) {
  const double u2 = in.u.squaredNorm();
  if (std::sqrt(u2) <= guards.eps_u) return Eigen::MatrixXd::Zero(est.jhat.rows(), est.jhat.cols());
  const double robust_gain =
      std::tanh(u2 / gains.chi) * est.beta_hat * u2 + 0.25 * in.sigma1.squaredNorm();
  const Eigen::VectorXd w = robust_term(in.sigma2, robust_gain, guards);
  const Eigen::VectorXd lhs =
      in.s_ddot - est.jhat * in.u_dot + gains.eps2 * smooth_sign(in.sigma2, gains.sign) + w +
      gains.alpha2 * gains.p2 * (diag_abs_pow(in.e2_dot, gains.p2 - 1.0) * in.e2_ddot) +
      gains.beta2 * gains.q2 * (diag_abs_pow(in.e2, gains.q2 - 1.0) * in.e2_dot);
  return lhs * (in.u.transpose() / u2);
}

Eigen::VectorXd lsmc_implicit_e2_ddot(const JacobianEstimate& est, const AdaptiveSignals& in,
                                      const LsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                      double dt) {
  const double u2 = in.u.squaredNorm();
  const double robust_gain = std::tanh(u2 / gains.chi) * est.beta_hat * u2;
  // e2'(t+dt) = K2^{-1} w with w = -sigma2 - R - (e2'(t+dt) - e2') / dt.
  const Eigen::Index n = in.e2.size();
  const Eigen::MatrixXd lhs = gains.k2 + Eigen::MatrixXd::Identity(n, n) / dt;
  const Eigen::VectorXd rhs =
      -in.sigma2 - robust_term(in.sigma2, robust_gain, guards) + in.e2_dot / dt;
  const Eigen::VectorXd next = lhs.partialPivLu().solve(rhs);
  return (next - in.e2_dot) / dt;
}

Eigen::VectorXd ftsmc_implicit_e2_ddot(const JacobianEstimate& est, const AdaptiveSignals& in,
                                       const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                       double dt) {
  const double u2 = in.u.squaredNorm();
  const double robust_gain =
      std::tanh(u2 / gains.chi) * est.beta_hat * u2 + 0.25 * in.sigma1.squaredNorm();
  // -e2'(t+dt) = c + Da e2'' with c collecting the explicit terms.
  const Eigen::VectorXd c = gains.eps2 * smooth_sign(in.sigma2, gains.sign) +
                            robust_term(in.sigma2, robust_gain, guards) +
                            gains.beta2 * gains.q2 * (diag_abs_pow(in.e2, gains.q2 - 1.0) * in.e2_dot);
  const Eigen::VectorXd da =
      gains.alpha2 * gains.p2 * diag_abs_pow(in.e2_dot, gains.p2 - 1.0).diagonal();
  Eigen::VectorXd out(in.e2.size());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double x = (c[i] - da[i] * in.e2_dot[i] / dt) / (1.0 + da[i] / dt);
    out[i] = (-x - in.e2_dot[i]) / dt;
  }
  return out;
}

UpdateStatus lsmc_jacobian_update(JacobianEstimate& est, const AdaptiveSignals& in,
                                  const LsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                  double dt) {
  if (in.u.norm() <= guards.eps_u) return UpdateStatus::kFrozen;
  est.jhat += dt * lsmc_jacobian_rate(est, in, gains, guards);
  require_finite(est);
  return UpdateStatus::kApplied;
}

UpdateStatus ftsmc_jacobian_update(JacobianEstimate& est, const AdaptiveSignals& in,
                                   const FtsmcEstimatorGains& gains, const AdaptiveGuards& guards,
                                   double dt) {
  if (in.u.norm() <= guards.eps_u) return UpdateStatus::kFrozen;
  est.jhat += dt * ftsmc_jacobian_rate(est, in, gains, guards);
  require_finite(est);
  return UpdateStatus::kApplied;
}

}  // namespace shapeservo
