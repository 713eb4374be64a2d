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

#include "shapeservo/harness.hpp"

#include <cmath>
#include <future>
#include <random>

#include "shapeservo/control.hpp"
#include "shapeservo/errors.hpp"
#include "shapeservo/moments.hpp"
#include "shapeservo/online.hpp"
#include "shapeservo/plant.hpp"

namespace shapeservo {
namespace {

Mat10x6 initial_jacobian(const ScenarioConfig& cfg, const GripperState& r0) {
  if (cfg.init == JacobianInit::kProbe) {
    return probe_initial_jacobian(r0, cfg.object, cfg.probe_delta, cfg.camera, cfg.contour_points);
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, cfg.random_init_scale);
  Mat10x6 j;
  for (int c = 0; c < kPoseDim; ++c) {
    for (int r = 0; r < kFeatureDim; ++r) j(r, c) = normal(rng);
  }
  return j;
}

// Rigid objects start from the nearest grasp-compatible pose.
GripperState initial_state(const ScenarioConfig& cfg) {
  return plant_step(GripperState::make(cfg.initial), Vec6::Zero(), cfg.dt, cfg.object);
}

}  // namespace

Vec10 target_features(const ScenarioConfig& cfg) {
  if (cfg.target_contour) {
    return extract_features(resample_closed(read_contour_file(*cfg.target_contour), cfg.contour_points),
                            cfg.camera);
  }
  const GripperState target = plant_step(GripperState::make(cfg.target), Vec6::Zero(), cfg.dt, cfg.object);
  return extract_features(plant_observe(target, cfg.object, cfg.contour_points), cfg.camera);
}

RunRecord run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  RunRecord rec;
  rec.method = cfg.control.method;

  const double dt = cfg.dt;
  const Eigen::MatrixXd k1 = cfg.control.k1 * Eigen::MatrixXd::Identity(kFeatureDim, kFeatureDim);
  const Vec10 sd_dot = Vec10::Zero();
  const SignSpec sign = cfg.estimator.sign;
  std::optional<TerminalGains> terminal;
  if (cfg.control.method == ControlMethod::kFtsmc) {
    terminal.emplace(cfg.control.alpha1, cfg.control.beta1, cfg.control.p1, cfg.control.q1,
                     cfg.control.eps1);
  }

  try {
    rec.s_target = target_features(cfg);
    GripperState r = initial_state(cfg);
    OnlineJacobian estimator(cfg.estimator, initial_jacobian(cfg, r));
    FeatureNormalizer normalizer(cfg.normalization);
    Vec10 s_hat = Vec10::Zero();

    for (int k = 0;; ++k) {
      const double t = k * dt;
      Tick tick;
      tick.step = k;
      tick.t = t;
      tick.r = r.r;
      tick.s = extract_features_detailed(plant_observe(r, cfg.object, cfg.contour_points), cfg.camera,
                                         normalizer)
                   .s;
      if (k == 0) s_hat = tick.s;
      tick.s_hat = s_hat;
      tick.e1 = tick.s - rec.s_target;
      tick.t1 = (tick.s - s_hat).norm();

      const auto& sig = estimator.observe(tick.s, tick.r, t);
      tick.e2 = sig.e2;
      tick.sigma2 = sig.sigma2;
      const Vec10 e1_dot = sig.s_dot - sd_dot;
      tick.sigma1 = terminal ? Vec10(surface_terminal(tick.e1, e1_dot, *terminal))
                             : Vec10(surface_linear(tick.e1, e1_dot, k1));

      const double err = tick.e1.norm();
      const bool below = err < cfg.threshold;
      if ((below && cfg.stop_at_threshold) || k >= cfg.max_steps) {
        tick.beta_hat = estimator.estimate().beta_hat;
        rec.converged = below;
        rec.ticks.push_back(tick);
        break;
      }

      const Eigen::MatrixXd jhat = estimator.estimate().jhat;
      Eigen::VectorXd u_cmd;
      switch (cfg.control.method) {
        case ControlMethod::kClassicalRls:
        case ControlMethod::kClassicalLkf:
          u_cmd = control_classical(tick.e1, jhat, cfg.control.lambda_c, cfg.control.mu);
          break;
        case ControlMethod::kLsmc: {
          const Vec10 e1_ddot = lsmc_implicit_e1_ddot(tick.sigma1, sd_dot, e1_dot, k1, dt);
          u_cmd = control_lsmc(tick.sigma1, sd_dot, e1_ddot, jhat, k1, cfg.control.mu);
          break;
        }
        case ControlMethod::kFtsmc: {
          const Vec10 e1_ddot =
              ftsmc_implicit_e1_ddot(tick.sigma1, tick.e1, e1_dot, sd_dot, *terminal, sign, dt);
          u_cmd = control_ftsmc(tick.sigma1, tick.e1, e1_dot, e1_ddot, sd_dot, jhat, *terminal, sign,
                                cfg.control.mu);
          break;
        }
      }
      estimator.adapt(tick.sigma1, dt);
      tick.beta_hat = estimator.estimate().beta_hat;

      const Vec6 u = saturate(Vec6(u_cmd), cfg.limits);
      if (!u.allFinite()) throw EstimatorDiverged("non-finite control command");
      tick.u = u;
      s_hat = propagate_shat(s_hat, estimator.estimate().jhat, u, dt);
      estimator.record_applied(u, t);
      r = plant_step(r, u, dt, cfg.object);
      rec.ticks.push_back(tick);
    }
  } catch (const Error& e) {
    rec.converged = false;
    rec.error = e.what();
  }
  rec.metrics = compute_metrics(rec, cfg.threshold, cfg.max_steps);
  return rec;
}

Eigen::VectorXd propagate_shat(const Eigen::Ref<const Eigen::VectorXd>& s_hat,
                               const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                               const Eigen::Ref<const Eigen::VectorXd>& u, double dt) {
  return s_hat + dt * (jhat * u);
}

SettlingBound compute_ts_bound(double v2_0, double a, double b, double v) {
  if (!(a > 0.0)) throw Error("settling bound needs a > 0");
  if (!(v > 0.0 && v < 1.0)) throw Error("settling bound needs v in (0, 1)");
  if (!(v2_0 >= 0.0) || !(b >= 0.0)) throw Error("settling bound needs V2(0) >= 0 and b >= 0");
  const double omega = b / ((1.0 - v) * a);
  const double ts = std::max(0.0, 2.0 / (a * v) * (std::sqrt(v2_0) - omega));
  return {ts, omega};
}

std::vector<SweepEntry> run_sweep(const ScenarioConfig& cfg, std::span<const ControlMethod> methods) {
  std::vector<std::future<RunRecord>> jobs;
  jobs.reserve(methods.size());
  for (const ControlMethod m : methods) {
    ScenarioConfig c = cfg;
    c.control.method = m;
    c.estimator.method = estimator_for(m);
    jobs.push_back(std::async(std::launch::async, [c] { return run_scenario(c); }));
  }
  std::vector<SweepEntry> out;
  for (std::size_t i = 0; i < methods.size(); ++i) out.push_back({methods[i], jobs[i].get()});
  return out;
}

}  // namespace shapeservo
