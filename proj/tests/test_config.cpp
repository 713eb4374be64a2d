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

#include <doctest.h>

#include <sstream>

#include "shapeservo/config.hpp"
#include "shapeservo/errors.hpp"

using namespace shapeservo;

TEST_CASE("defaults parse from an empty file") {
  std::istringstream in("");
  const auto cfg = parse_config(in);
  CHECK(cfg.dt == 0.02);
  CHECK(cfg.contour_points == 300);
  CHECK(cfg.max_steps == 1500);
  CHECK(cfg.control.method == ControlMethod::kFtsmc);
  CHECK(cfg.limits.linear == 0.06);
  CHECK(cfg.limits.angular == 0.2);
}

TEST_CASE("keys, comments and vectors") {
  std::istringstream in(
      "# comment\n"
      "control.method = lsmc   # trailing\n"
      "estimator.method = lsmc\n"
      "\n"
      "run.max_steps=77\n"
      "initial.r = -0.1 0 0.3 0.1 0 -0.3\n"
      "signals.sign_mode = hard\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.control.method == ControlMethod::kLsmc);
  CHECK(cfg.estimator.method == EstimatorMethod::kLsmc);
  CHECK(cfg.max_steps == 77);
  CHECK(cfg.initial[2] == 0.3);
  CHECK(cfg.initial[5] == -0.3);
  CHECK(cfg.estimator.sign.mode == SignMode::kHard);
}

TEST_CASE("unknown keys are errors") {
  std::istringstream in("control.gain = 3\n");
  CHECK_THROWS_AS(parse_config(in), ConfigError);
}

TEST_CASE("malformed values are errors") {
  for (const char* text : {"run.max_steps = many\n", "initial.r = 1 2 3\n", "plant.dt = -1\n",
                           "control.p1 = 2.5\n", "just words\n", "object.kind = sponge\n"}) {
    CAPTURE(text);
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
}

TEST_CASE("estimator must match the control method") {
  std::istringstream in("control.method = ftsmc\nestimator.method = rls\n");
  CHECK_THROWS_AS(parse_config(in), ConfigError);
}

TEST_CASE("relative contour paths resolve against the config directory") {
  std::istringstream in("target.contour = unit_square.txt\n");
  const auto cfg = parse_config(in, SHAPESERVO_TEST_DATA);
  REQUIRE(cfg.target_contour);
  CHECK(cfg.target_contour->filename() == "unit_square.txt");
  CHECK(cfg.target_contour->parent_path() == std::filesystem::path(SHAPESERVO_TEST_DATA));
}

TEST_CASE("shipped configs load") {
  for (const char* name : {"cable.conf", "rigid_box.conf", "nh_beam.conf", "at_target.conf"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_config(std::filesystem::path(SHAPESERVO_CONFIG_DIR) / name));
  }
}

TEST_CASE("every listed key is accepted") {
  CHECK(config_keys().size() > 40);
  ScenarioConfig cfg;
  CHECK_NOTHROW(apply_config_key(cfg, "run.seed", "42"));
  CHECK(cfg.seed == 42);
  CHECK_THROWS_AS(apply_config_key(cfg, "run.speed", "42"), ConfigError);
}

TEST_CASE("method names") {
  for (auto m : {ControlMethod::kClassicalRls, ControlMethod::kClassicalLkf, ControlMethod::kLsmc,
                 ControlMethod::kFtsmc}) {
    CHECK(parse_control_method(control_method_name(m)) == m);
  }
  CHECK(estimator_for(ControlMethod::kClassicalLkf) == EstimatorMethod::kLkf);
}
