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

#include "shapeservo/race.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace shapeservo {

Mat10x6 synthetic_jacobian(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Mat10x6 j;
  for (int c = 0; c < kPoseDim; ++c) {
    for (int r = 0; r < kFeatureDim; ++r) j(r, c) = uni(rng);
  }
  // Strengthen the diagonal so the columns stay well separated.
  for (int c = 0; c < kPoseDim; ++c) j(c, c) += 2.0 * (c % 2 == 0 ? 1.0 : -1.0);
  return j;
}

Mat10x6 perturbed_jacobian(const Mat10x6& truth, double init_error, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat10x6 d;
  for (int c = 0; c < kPoseDim; ++c) {
    for (int r = 0; r < kFeatureDim; ++r) d(r, c) = normal(rng);
  }
  return truth + d * (init_error * truth.norm() / d.norm());
}

Vec6 race_excitation(const RaceConfig& cfg, double t) {
  Vec6 u;
  for (int i = 0; i < kPoseDim; ++i) {
    u[i] = cfg.amplitude * std::cos(cfg.frequencies[i] * t + 0.7 * i);
  }
  return u;
}

RaceTrace run_race(const RaceConfig& cfg, EstimatorMethod method) {
  const Mat10x6 truth = synthetic_jacobian(cfg.seed);
  EstimatorSettings settings = cfg.estimator;
  settings.method = method;
  OnlineJacobian est(settings, perturbed_jacobian(truth, cfg.init_error, cfg.seed));

  RaceTrace trace{method, {}, {}, {}};
  Vec10 s = Vec10::Zero();
  Vec6 r = Vec6::Zero();
  Vec10 s_hat = s;
  const Eigen::VectorXd sigma1 = Eigen::VectorXd::Zero(kFeatureDim);
  for (int k = 0; k < cfg.steps; ++k) {
    const double t = k * cfg.dt;
    const auto& sig = est.observe(s, r, t);
    est.adapt(sigma1, cfg.dt);
    const Vec6 u = race_excitation(cfg, t);
    trace.t1.push_back((s - s_hat).norm());
    trace.e2_norm.push_back(sig.e2.norm());
    trace.jac_error.push_back((est.estimate().jhat - truth).norm());
    s_hat += cfg.dt * (est.estimate().jhat * u);
    est.record_applied(u, t);
    s += cfg.dt * (truth * u);
    r += cfg.dt * u;
  }
  return trace;
}

double tail_mean(const std::vector<double>& v, std::size_t window) {
  const std::size_t n = std::min(window, v.size());
  if (n == 0) return 0.0;
  return std::accumulate(v.end() - static_cast<std::ptrdiff_t>(n), v.end(), 0.0) /
         static_cast<double>(n);
}

}  // namespace shapeservo
