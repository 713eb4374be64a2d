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

#include "shapeservo/control.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "shapeservo/errors.hpp"

namespace shapeservo {

Eigen::MatrixXd damped_pinv(const Eigen::Ref<const Eigen::MatrixXd>& j, double mu) {
  Eigen::MatrixXd gram = j.transpose() * j;
  gram.diagonal().array() += mu;
  return gram.ldlt().solve(j.transpose());
}

TerminalGains::TerminalGains(double alpha, double beta, double p, double q, double eps)
    : alpha_(alpha), beta_(beta), p_(p), q_(q), eps_(eps) {
  if (!(p > 1.0 && p < 2.0)) throw ConfigError("terminal surface needs p in (1, 2)");
  if (!(q > p)) throw ConfigError("terminal surface needs q > p");
  if (!(alpha > 0.0 && beta > 0.0 && eps > 0.0)) {
    throw ConfigError("terminal surface gains must be positive");
  }
}

Eigen::VectorXd surface_linear(const Eigen::Ref<const Eigen::VectorXd>& e,
                               const Eigen::Ref<const Eigen::VectorXd>& e_dot,
                               const Eigen::Ref<const Eigen::MatrixXd>& k) {
  return k * e + e_dot;
}

Eigen::VectorXd surface_terminal(const Eigen::Ref<const Eigen::VectorXd>& e,
                                 const Eigen::Ref<const Eigen::VectorXd>& e_dot,
                                 const TerminalGains& g) {
  return e + g.alpha() * sig_vec(e_dot, g.p()) + g.beta() * sig_vec(e, g.q());
}

Eigen::VectorXd control_classical(const Eigen::Ref<const Eigen::VectorXd>& e1,
                                  const Eigen::Ref<const Eigen::MatrixXd>& jhat, double lambda,
                                  double mu) {
  return -lambda * (damped_pinv(jhat, mu) * e1);
}

Eigen::VectorXd control_lsmc(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                             const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                             const Eigen::Ref<const Eigen::VectorXd>& e1_ddot,
                             const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                             const Eigen::Ref<const Eigen::MatrixXd>& k1, double mu) {
  const Eigen::VectorXd rhs = -sigma1 + k1 * sd_dot - e1_ddot;
  return damped_pinv(jhat, mu) * k1.llt().solve(rhs);
}

Eigen::VectorXd control_ftsmc(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                              const Eigen::Ref<const Eigen::VectorXd>& e1,
                              const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                              const Eigen::Ref<const Eigen::VectorXd>& e1_ddot,
                              const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                              const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                              const TerminalGains& g, const SignSpec& sign, double mu) {
  const Eigen::VectorXd rhs = -g.alpha() * g.p() * (diag_abs_pow(e1_dot, g.p() - 1.0) * e1_ddot) -
                              g.eps() * smooth_sign(sigma1, sign) -
                              g.beta() * g.q() * (diag_abs_pow(e1, g.q() - 1.0) * e1_dot) + sd_dot;
  return damped_pinv(jhat, mu) * rhs;
}

Eigen::VectorXd lsmc_implicit_e1_ddot(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                                      const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                                      const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                                      const Eigen::Ref<const Eigen::MatrixXd>& k1, double dt) {
  // K1 e1'(t+dt) = -sigma1 + K1 s_d' - (e1'(t+dt) - e1') / dt.
  Eigen::MatrixXd lhs = k1;
  lhs.diagonal().array() += 1.0 / dt;
  const Eigen::VectorXd next = lhs.llt().solve(-sigma1 + k1 * sd_dot + e1_dot / dt);
  return (next - e1_dot) / dt;
}

Eigen::VectorXd ftsmc_implicit_e1_ddot(const Eigen::Ref<const Eigen::VectorXd>& sigma1,
                                       const Eigen::Ref<const Eigen::VectorXd>& e1,
                                       const Eigen::Ref<const Eigen::VectorXd>& e1_dot,
                                       const Eigen::Ref<const Eigen::VectorXd>& sd_dot,
                                       const TerminalGains& g, const SignSpec& sign, double dt) {
  const Eigen::VectorXd c = -g.eps() * smooth_sign(sigma1, sign) -
                            g.beta() * g.q() * (diag_abs_pow(e1, g.q() - 1.0) * e1_dot) + sd_dot;
  const Eigen::VectorXd da = g.alpha() * g.p() * diag_abs_pow(e1_dot, g.p() - 1.0).diagonal();
  Eigen::VectorXd out(e1.size());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double next = (c[i] + da[i] * e1_dot[i] / dt) / (1.0 + da[i] / dt);
    out[i] = (next - e1_dot[i]) / dt;
  }
  return out;
}

}  // namespace shapeservo
