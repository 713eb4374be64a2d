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

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "shapeservo/moments.hpp"
#include "shapeservo/online.hpp"
#include "shapeservo/plant.hpp"
#include "shapeservo/signals.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

enum class ControlMethod { kClassicalRls, kClassicalLkf, kLsmc, kFtsmc };

ControlMethod parse_control_method(std::string_view name);
std::string_view control_method_name(ControlMethod m);
EstimatorMethod estimator_for(ControlMethod m);

enum class JacobianInit { kProbe, kRandom };

struct ControlSettings {
  ControlMethod method = ControlMethod::kFtsmc;
  double k1 = 0.8;        // K1 = k1 * I
  double alpha1 = 0.5;
  double beta1 = 0.5;
  double p1 = 1.5;
  double q1 = 2.0;
  double eps1 = 0.1;
  double lambda_c = 0.8;
  double mu = 1e-6;
};

struct ScenarioConfig {
  ObjectModel object;
  CameraSpec camera;
  double dt = 0.02;
  std::size_t contour_points = 300;
  Normalization normalization = Normalization::kPerFrame;

  SaturationSpec limits;
  EstimatorSettings estimator;
  ControlSettings control;

  double threshold = 0.01;
  int max_steps = 1500;
  bool stop_at_threshold = true;
  std::uint64_t seed = 0;

  JacobianInit init = JacobianInit::kProbe;
  double probe_delta = 1e-3;
  double random_init_scale = 1.0;

  Vec6 initial = (Vec6() << -0.15, 0.0, 0.4, 0.15, 0.0, -0.2).finished();
  // Target gripper pose rendered through the plant, or a contour file. A
  // contour file wins when both are set.
  Vec6 target = (Vec6() << -0.12, 0.08, 0.7, 0.14, 0.05, -0.4).finished();
  std::optional<std::filesystem::path> target_contour;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

// Flat "key = value" text. '#' starts a comment. Unknown keys throw
// ConfigError. Relative contour paths resolve against `base_dir`.
ScenarioConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ScenarioConfig load_config(const std::filesystem::path& path);

// Applies one key; exposed so the CLI and tests can override single values.
void apply_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                      const std::filesystem::path& base_dir = {});

// Every accepted key with a one-line description.
const std::map<std::string, std::string, std::less<>>& config_keys();

}  // namespace shapeservo
