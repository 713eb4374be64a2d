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

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "shapeservo/config.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

struct Tick {
  int step = 0;
  double t = 0.0;
  Vec6 r = Vec6::Zero();
  Vec6 u = Vec6::Zero();   // command applied after this observation (zero on the last tick)
  Vec10 s = Vec10::Zero();
  Vec10 s_hat = Vec10::Zero();
  Vec10 e1 = Vec10::Zero();
  Vec10 e2 = Vec10::Zero();
  Vec10 sigma1 = Vec10::Zero();
  Vec10 sigma2 = Vec10::Zero();
  double t1 = 0.0;
  double beta_hat = 0.0;
};

struct Metrics {
  int t_max_steps = 0;               // first step with |e1| < threshold, else the step budget
  bool threshold_reached = false;
  std::optional<double> t_d;         // s; first time |e1| <= 0.1 |e1(0)|
  std::optional<double> t_s;         // s; from t_d to the first |e1| <= settle level
  std::optional<int> t_d_steps;
  double iae = 0.0;                  // left-rectangle sum of |e1| dt
};

struct RunRecord {
  ControlMethod method = ControlMethod::kFtsmc;
  Vec10 s_target = Vec10::Zero();
  std::vector<Tick> ticks;
  Metrics metrics;
  bool converged = false;
  std::string error;  // empty unless the run aborted
};

// Closed-loop shape servoing: probe the initial Jacobian, then observe,
// estimate, control and step the plant until |e1| < threshold or the step
// budget is spent. Plant and estimator failures end the run with
// converged = false and `error` set.
RunRecord run_scenario(const ScenarioConfig& cfg);

// Target features for a config: the target contour file if given, otherwise
// the target pose rendered through the plant.
Vec10 target_features(const ScenarioConfig& cfg);

struct ErrorSample {
  double t;
  double norm_e1;
};

// Summary indices of an error trace. `budget` is reported as t_max_steps
// when the threshold is never crossed. Throws Error on an empty trace.
Metrics compute_metrics(std::span<const ErrorSample> trace, double threshold, int budget);
Metrics compute_metrics(const RunRecord& rec, double threshold, int budget);

// One Euler step of s_hat' = J u.
Eigen::VectorXd propagate_shat(const Eigen::Ref<const Eigen::VectorXd>& s_hat,
                               const Eigen::Ref<const Eigen::MatrixXd>& jhat,
                               const Eigen::Ref<const Eigen::VectorXd>& u, double dt);

struct SettlingBound {
  double t_s;
  double omega;
};

// Omega = b / ((1 - v) a), T_s = 2 / (a v) (sqrt(V0) - Omega) clamped at 0.
// Documentation-grade only: a and b involve the unknown true error bound.
SettlingBound compute_ts_bound(double v2_0, double a, double b, double v);

// CSV run record, schema v1.
void write_csv(std::ostream& out, const RunRecord& rec);
void write_json(std::ostream& out, const RunRecord& rec);
void write_summary_json(std::ostream& out, const RunRecord& rec);

struct SweepEntry {
  ControlMethod method;
  RunRecord record;
};

// Runs every listed method on the same config; each scenario is independent.
std::vector<SweepEntry> run_sweep(const ScenarioConfig& cfg, std::span<const ControlMethod> methods);

void write_sweep_table(std::ostream& out, std::span<const SweepEntry> entries);

}  // namespace shapeservo
