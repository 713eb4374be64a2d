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

#include "shapeservo/online.hpp"

#include <algorithm>

#include "shapeservo/control.hpp"

namespace shapeservo {

OnlineJacobian::OnlineJacobian(const EstimatorSettings& settings, Eigen::MatrixXd j0)
    : settings_(settings),
      est_(JacobianEstimate::make(settings.method, j0, settings.rls, settings.lkf)),
      s_filter_(static_cast<int>(j0.rows()), settings.filter_pole),
      e2_filter_(static_cast<int>(j0.rows()), settings.filter_pole),
      u_filter_(static_cast<int>(j0.cols()), 0.0),
      u_last_(Eigen::VectorXd::Zero(j0.cols())),
      u_rate_(Eigen::VectorXd::Zero(j0.cols())) {
  est_.beta_hat = settings.beta0;
}

const EstimatorSignals& OnlineJacobian::observe(const Eigen::Ref<const Eigen::VectorXd>& s,
                                                const Eigen::Ref<const Eigen::VectorXd>& r,
                                                double t) {
  const auto ds = s_filter_.update(s, t);
  sig_.s_dot = ds.rate;
  sig_.s_ddot = ds.accel;
  if (s_filter_.warm()) {
    sig_.e2 = estimation_error(est_.jhat, sig_.s_dot, u_last_);
    const auto de2 = e2_filter_.update(sig_.e2, t);
    sig_.e2_dot = de2.rate;
    sig_.e2_ddot = de2.accel;
  } else {
    sig_.e2 = Eigen::VectorXd::Zero(s.size());
    sig_.e2_dot = sig_.e2;
    sig_.e2_ddot = sig_.e2;
  }
  if (settings_.method == EstimatorMethod::kFtsmc) {
    const TerminalGains g(settings_.alpha2, settings_.beta2, settings_.p2, settings_.q2,
                          settings_.eps2);
    sig_.sigma2 = surface_terminal(sig_.e2, sig_.e2_dot, g);
  } else {
    sig_.sigma2 = settings_.k2 * sig_.e2 + sig_.e2_dot;
  }
  s_cur_ = s;
  r_cur_ = r;
  return sig_;
}

UpdateStatus OnlineJacobian::adapt(const Eigen::Ref<const Eigen::VectorXd>& sigma1, double dt) {
  est_.beta_hat = beta_update(est_.beta_hat, u_last_, settings_.chi, settings_.gamma, dt);
  UpdateStatus status = UpdateStatus::kFrozen;
  AdaptiveGuards guards = settings_.guards;
  guards.robust_cap = std::min(guards.robust_cap, 1.0 / dt);
  switch (settings_.method) {
    case EstimatorMethod::kRls:
    case EstimatorMethod::kLkf: {
      if (s_prev_ && r_prev_) {
        const Eigen::VectorXd ds = s_cur_ - *s_prev_;
        const Eigen::VectorXd dr = r_cur_ - *r_prev_;
        const double min_dr = settings_.guards.eps_u;
        status = settings_.method == EstimatorMethod::kRls ? rls_update(est_, ds, dr, min_dr)
                                                           : lkf_update(est_, ds, dr, min_dr);
      }
      break;
    }
    case EstimatorMethod::kLsmc: {
      if (!e2_filter_.warm()) break;
      AdaptiveSignals in{sig_.s_ddot, u_last_, u_rate_, sig_.e2, sig_.e2_dot,
                               sig_.e2_ddot, sigma1,  sig_.sigma2};
      const LsmcEstimatorGains gains{
          settings_.k2 * Eigen::MatrixXd::Identity(est_.jhat.rows(), est_.jhat.rows()),
          settings_.chi};
      in.e2_ddot = lsmc_implicit_e2_ddot(est_, in, gains, guards, dt);
      sig_.e2_ddot = in.e2_ddot;
      status = lsmc_jacobian_update(est_, in, gains, guards, dt);
      break;
    }
    case EstimatorMethod::kFtsmc: {
      if (!e2_filter_.warm()) break;
      AdaptiveSignals in{sig_.s_ddot, u_last_, u_rate_, sig_.e2, sig_.e2_dot,
                               sig_.e2_ddot, sigma1,  sig_.sigma2};
      const FtsmcEstimatorGains gains{settings_.eps2, settings_.alpha2, settings_.beta2,
                                      settings_.p2,   settings_.q2,     settings_.chi,
                                      settings_.sign};
      in.e2_ddot = ftsmc_implicit_e2_ddot(est_, in, gains, guards, dt);
      sig_.e2_ddot = in.e2_ddot;
      status = ftsmc_jacobian_update(est_, in, gains, guards, dt);
      break;
    }
  }
  s_prev_ = s_cur_;
  r_prev_ = r_cur_;
  return status;
}

void OnlineJacobian::record_applied(const Eigen::Ref<const Eigen::VectorXd>& u, double t) {
  u_last_ = u;
  u_rate_ = u_filter_.update(u, t).rate;
}

}  // namespace shapeservo
