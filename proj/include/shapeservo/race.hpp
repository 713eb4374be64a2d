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

#include <array>
#include <cstdint>
#include <vector>

#include "shapeservo/online.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

// Open-loop comparison of the Jacobian estimators on a plant with a known,
// constant Jacobian: s' = J u, driven by a multi-sine excitation.
struct RaceConfig {
  int steps = 500;
  double dt = 0.02;
  std::uint64_t seed = 7;
  double amplitude = 0.05;  // per-axis excitation amplitude
  std::array<double, kPoseDim> frequencies{1.1, 1.7, 2.3, 2.9, 3.7, 4.3};  // rad/s
  double init_error = 0.5;  // |J(0) - J|_F relative to |J|_F
  EstimatorSettings estimator;
};

struct RaceTrace {
  EstimatorMethod method;
  std::vector<double> t1;         // |s - s_hat| per step
  std::vector<double> e2_norm;    // |e2| per step
  std::vector<double> jac_error;  // |J_hat - J|_F per step
};

// Deterministic well-conditioned 10 x 6 matrix for the given seed.
Mat10x6 synthetic_jacobian(std::uint64_t seed);

// Perturbation of `truth` with Frobenius norm init_error * |truth|_F.
Mat10x6 perturbed_jacobian(const Mat10x6& truth, double init_error, std::uint64_t seed);

Vec6 race_excitation(const RaceConfig& cfg, double t);

RaceTrace run_race(const RaceConfig& cfg, EstimatorMethod method);

// Mean of the last `window` entries.
double tail_mean(const std::vector<double>& v, std::size_t window);

}  // namespace shapeservo
