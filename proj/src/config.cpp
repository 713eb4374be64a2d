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

#include "shapeservo/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "shapeservo/control.hpp"
#include "shapeservo/errors.hpp"

namespace shapeservo {
namespace {

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": expected a number, got '" + value + "'");
  return out;
}

long long to_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

Vec6 to_pose(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  Vec6 r;
  std::string tok;
  for (int i = 0; i < kPoseDim; ++i) {
    if (!(in >> tok)) throw ConfigError(key + ": expected six numbers");
    r[i] = to_double(key, tok);
  }
  if (in >> tok) throw ConfigError(key + ": expected six numbers");
  return r;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

using Setter = std::function<void(ScenarioConfig&, const std::string& key, const std::string& value,
                                  const std::filesystem::path& base)>;

struct KeySpec {
  std::string help;
  Setter set;
};

template <class F>
KeySpec num(std::string help, F field) {
  return {std::move(help), [field](ScenarioConfig& c, const std::string& k, const std::string& v,
                                   const std::filesystem::path&) { field(c) = to_double(k, v); }};
}

const std::map<std::string, KeySpec, std::less<>>& table() {
  static const std::map<std::string, KeySpec, std::less<>> t = [] {
    std::map<std::string, KeySpec, std::less<>> m;
    m["object.kind"] = {"elastic-cable | rigid-box | nh-beam",
                        [](ScenarioConfig& c, const std::string&, const std::string& v,
                           const std::filesystem::path&) { c.object.kind = parse_object_kind(v); }};
    m["object.w"] = num("object half-width (m)", [](ScenarioConfig& c) -> double& { return c.object.half_width; });
    m["object.tau"] = num("Hermite tangent scale (m)", [](ScenarioConfig& c) -> double& { return c.object.tangent_scale; });
    m["object.rho"] = num("rigid core fraction of an nh-beam", [](ScenarioConfig& c) -> double& { return c.object.rigid_fraction; });
    m["object.length"] = num("rigid-box length / nh-beam nominal length (m)", [](ScenarioConfig& c) -> double& { return c.object.length; });
    m["object.box_width"] = num("rigid-box width (m)", [](ScenarioConfig& c) -> double& { return c.object.box_width; });
    m["camera.width"] = num("image width C_w (px)", [](ScenarioConfig& c) -> double& { return c.camera.width; });
    m["camera.height"] = num("image height C_h (px)", [](ScenarioConfig& c) -> double& { return c.camera.height; });
    m["camera.scale"] = num("projection scale (px/m)", [](ScenarioConfig& c) -> double& { return c.object.pixels_per_meter; });
    m["camera.offset_u"] = num("image u of the world origin (px)", [](ScenarioConfig& c) -> double& { return c.object.image_offset.u; });
    m["camera.offset_v"] = num("image v of the world origin (px)", [](ScenarioConfig& c) -> double& { return c.object.image_offset.v; });
    m["plant.dt"] = num("control period (s)", [](ScenarioConfig& c) -> double& { return c.dt; });
    m["plant.N"] = {"contour points after resampling",
                    [](ScenarioConfig& c, const std::string& k, const std::string& v,
                       const std::filesystem::path&) { c.contour_points = static_cast<std::size_t>(to_int(k, v)); }};
    m["plant.centerline_samples"] = {"centerline samples before resampling",
                                     [](ScenarioConfig& c, const std::string& k, const std::string& v,
                                        const std::filesystem::path&) {
                                       c.object.centerline_samples = static_cast<std::size_t>(to_int(k, v));
                                     }};
    m["features.normalization"] = {"frame | running",
                                   [](ScenarioConfig& c, const std::string& k, const std::string& v,
                                      const std::filesystem::path&) {
                                     if (v == "frame") c.normalization = Normalization::kPerFrame;
                                     else if (v == "running") c.normalization = Normalization::kRunning;
                                     else throw ConfigError(k + ": expected frame or running");
                                   }};
    m["signals.a_f"] = num("derivative filter pole in [0, 1)", [](ScenarioConfig& c) -> double& { return c.estimator.filter_pole; });
    m["signals.sign_mode"] = {"hard | tanh",
                              [](ScenarioConfig& c, const std::string&, const std::string& v,
                                 const std::filesystem::path&) { c.estimator.sign.mode = parse_sign_mode(v); }};
    m["signals.eps_s"] = num("tanh sign slope", [](ScenarioConfig& c) -> double& { return c.estimator.sign.eps; });
    m["limits.linear"] = num("linear speed limit (m/s)", [](ScenarioConfig& c) -> double& { return c.limits.linear; });
    m["limits.angular"] = num("angular speed limit (rad/s)", [](ScenarioConfig& c) -> double& { return c.limits.angular; });
    m["estimator.method"] = {"rls | lkf | lsmc | ftsmc; must agree with control.method",
                             [](ScenarioConfig& c, const std::string& k, const std::string& v,
                                const std::filesystem::path&) {
                               if (parse_estimator_method(v) != estimator_for(c.control.method)) {
                                 throw ConfigError(k + " disagrees with control.method (set control.method first)");
                               }
                             }};
    m["estimator.lambda"] = num("RLS forgetting factor", [](ScenarioConfig& c) -> double& { return c.estimator.rls.lambda; });
    m["estimator.P0"] = num("RLS initial covariance scale", [](ScenarioConfig& c) -> double& { return c.estimator.rls.p0; });
    m["estimator.q"] = num("LKF process noise", [](ScenarioConfig& c) -> double& { return c.estimator.lkf.q; });
    m["estimator.rho_m"] = num("LKF measurement noise", [](ScenarioConfig& c) -> double& { return c.estimator.lkf.rho_m; });
    m["estimator.lkf_P0"] = num("LKF initial covariance scale", [](ScenarioConfig& c) -> double& { return c.estimator.lkf.p0; });
    m["estimator.K2"] = num("K2 = K2 * I", [](ScenarioConfig& c) -> double& { return c.estimator.k2; });
    m["estimator.chi"] = num("chi in the beta law", [](ScenarioConfig& c) -> double& { return c.estimator.chi; });
    m["estimator.gamma"] = num("gamma in the beta law", [](ScenarioConfig& c) -> double& { return c.estimator.gamma; });
    m["estimator.beta0"] = num("initial beta estimate", [](ScenarioConfig& c) -> double& { return c.estimator.beta0; });
    m["estimator.eps2"] = num("terminal estimator reaching gain", [](ScenarioConfig& c) -> double& { return c.estimator.eps2; });
    m["estimator.alpha2"] = num("terminal estimator alpha2", [](ScenarioConfig& c) -> double& { return c.estimator.alpha2; });
    m["estimator.beta2"] = num("terminal estimator beta2", [](ScenarioConfig& c) -> double& { return c.estimator.beta2; });
    m["estimator.p2"] = num("terminal estimator p2 in (1, 2)", [](ScenarioConfig& c) -> double& { return c.estimator.p2; });
    m["estimator.q2"] = num("terminal estimator q2 > p2", [](ScenarioConfig& c) -> double& { return c.estimator.q2; });
    m["estimator.eps_u"] = num("freeze adaptive laws below this |u|", [](ScenarioConfig& c) -> double& { return c.estimator.guards.eps_u; });
    m["estimator.eps_sigma"] = num("drop the robust term below this |sigma2|", [](ScenarioConfig& c) -> double& { return c.estimator.guards.eps_sigma; });
    m["estimator.init"] = {"probe | random",
                           [](ScenarioConfig& c, const std::string& k, const std::string& v,
                              const std::filesystem::path&) {
                             if (v == "probe") c.init = JacobianInit::kProbe;
                             else if (v == "random") c.init = JacobianInit::kRandom;
                             else throw ConfigError(k + ": expected probe or random");
                           }};
    m["estimator.probe_delta"] = num("finite-difference step for the initial probe", [](ScenarioConfig& c) -> double& { return c.probe_delta; });
    m["estimator.random_scale"] = num("std-dev of the random initial Jacobian entries", [](ScenarioConfig& c) -> double& { return c.random_init_scale; });
    m["control.method"] = {"classical-rls | classical-lkf | lsmc | ftsmc",
                           [](ScenarioConfig& c, const std::string&, const std::string& v,
                              const std::filesystem::path&) {
                             c.control.method = parse_control_method(v);
                             c.estimator.method = estimator_for(c.control.method);
                           }};
    m["control.K1"] = num("K1 = K1 * I", [](ScenarioConfig& c) -> double& { return c.control.k1; });
    m["control.alpha1"] = num("terminal surface alpha1", [](ScenarioConfig& c) -> double& { return c.control.alpha1; });
    m["control.beta1"] = num("terminal surface beta1", [](ScenarioConfig& c) -> double& { return c.control.beta1; });
    m["control.p1"] = num("terminal surface p1 in (1, 2)", [](ScenarioConfig& c) -> double& { return c.control.p1; });
    m["control.q1"] = num("terminal surface q1 > p1", [](ScenarioConfig& c) -> double& { return c.control.q1; });
    m["control.eps1"] = num("terminal reaching gain", [](ScenarioConfig& c) -> double& { return c.control.eps1; });
    m["control.lambda_c"] = num("classical servo gain", [](ScenarioConfig& c) -> double& { return c.control.lambda_c; });
    m["control.mu"] = num("pseudo-inverse damping", [](ScenarioConfig& c) -> double& { return c.control.mu; });
    m["run.threshold"] = num("stop once |e1| drops below this", [](ScenarioConfig& c) -> double& { return c.threshold; });
    m["run.max_steps"] = {"step budget",
                          [](ScenarioConfig& c, const std::string& k, const std::string& v,
                             const std::filesystem::path&) { c.max_steps = static_cast<int>(to_int(k, v)); }};
    m["run.stop_at_threshold"] = {"true: stop at the threshold; false: always run max_steps",
                                  [](ScenarioConfig& c, const std::string& k, const std::string& v,
                                     const std::filesystem::path&) { c.stop_at_threshold = to_bool(k, v); }};
    m["run.seed"] = {"seed for random initialization",
                     [](ScenarioConfig& c, const std::string& k, const std::string& v,
                        const std::filesystem::path&) { c.seed = static_cast<std::uint64_t>(to_int(k, v)); }};
    m["initial.r"] = {"initial gripper poses: x1 y1 th1 x2 y2 th2",
                      [](ScenarioConfig& c, const std::string& k, const std::string& v,
                         const std::filesystem::path&) { c.initial = to_pose(k, v); }};
    m["target.r"] = {"target gripper poses rendered through the plant",
                     [](ScenarioConfig& c, const std::string& k, const std::string& v,
                        const std::filesystem::path&) { c.target = to_pose(k, v); }};
    m["target.contour"] = {"target contour file (\"u v\" per line)",
                           [](ScenarioConfig& c, const std::string&, const std::string& v,
                              const std::filesystem::path& base) {
                             std::filesystem::path p(v);
                             c.target_contour = p.is_relative() && !base.empty() ? base / p : p;
                           }};
    return m;
  }();
  return t;
}

}  // namespace

ControlMethod parse_control_method(std::string_view name) {
  if (name == "classical-rls") return ControlMethod::kClassicalRls;
  if (name == "classical-lkf") return ControlMethod::kClassicalLkf;
  if (name == "lsmc") return ControlMethod::kLsmc;
  if (name == "ftsmc") return ControlMethod::kFtsmc;
  throw ConfigError("unknown control method '" + std::string(name) + "'");
}

std::string_view control_method_name(ControlMethod m) {
  switch (m) {
    case ControlMethod::kClassicalRls:
      return "classical-rls";
    case ControlMethod::kClassicalLkf:
      return "classical-lkf";
    case ControlMethod::kLsmc:
      return "lsmc";
    case ControlMethod::kFtsmc:
      return "ftsmc";
  }
  return "unknown";
}

EstimatorMethod estimator_for(ControlMethod m) {
  switch (m) {
    case ControlMethod::kClassicalRls:
      return EstimatorMethod::kRls;
    case ControlMethod::kClassicalLkf:
      return EstimatorMethod::kLkf;
    case ControlMethod::kLsmc:
      return EstimatorMethod::kLsmc;
    case ControlMethod::kFtsmc:
      return EstimatorMethod::kFtsmc;
  }
  return EstimatorMethod::kFtsmc;
}

void ScenarioConfig::validate() const {
  try {
    object.validate();
  } catch (const InvalidConfiguration& e) {
    throw ConfigError(e.what());
  }
  if (!(camera.width > 0.0 && camera.height > 0.0)) throw ConfigError("camera size must be positive");
  if (!(dt > 0.0)) throw ConfigError("plant.dt must be positive");
  if (contour_points < 3) throw ConfigError("plant.N must be at least 3");
  if (!(threshold > 0.0)) throw ConfigError("run.threshold must be positive");
  if (max_steps <= 0) throw ConfigError("run.max_steps must be positive");
  if (!(limits.linear > 0.0 && limits.angular > 0.0)) throw ConfigError("limits must be positive");
  if (!(estimator.filter_pole >= 0.0 && estimator.filter_pole < 1.0)) {
    throw ConfigError("signals.a_f must lie in [0, 1)");
  }
  if (!(estimator.sign.eps > 0.0)) throw ConfigError("signals.eps_s must be positive");
  if (!(estimator.chi > 0.0 && estimator.gamma > 0.0)) throw ConfigError("chi and gamma must be positive");
  if (!(estimator.k2 > 0.0 && control.k1 > 0.0)) throw ConfigError("K1 and K2 must be positive definite");
  if (!(estimator.rls.lambda > 0.0 && estimator.rls.lambda <= 1.0)) {
    throw ConfigError("estimator.lambda must lie in (0, 1]");
  }
  if (!(estimator.lkf.rho_m > 0.0 && estimator.lkf.q >= 0.0)) throw ConfigError("LKF noise must be positive");
  if (!(control.lambda_c > 0.0)) throw ConfigError("control.lambda_c must be positive");
  if (!(control.mu >= 0.0)) throw ConfigError("control.mu must be non-negative");
  if (!(probe_delta > 0.0)) throw ConfigError("estimator.probe_delta must be positive");
  try {
    TerminalGains(control.alpha1, control.beta1, control.p1, control.q1, control.eps1);
  } catch (const Error& e) {
    throw ConfigError(std::string("control: ") + e.what());
  }
  try {
    TerminalGains(estimator.alpha2, estimator.beta2, estimator.p2, estimator.q2, estimator.eps2);
  } catch (const Error& e) {
    throw ConfigError(std::string("estimator: ") + e.what());
  }
}

void apply_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                      const std::filesystem::path& base_dir) {
  const auto it = table().find(key);
  if (it == table().end()) throw ConfigError("unknown config key '" + key + "'");
  try {
    it->second.set(cfg, key, value, base_dir);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

ScenarioConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ScenarioConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_key(cfg, trim(std::string_view(body).substr(0, eq)),
                     trim(std::string_view(body).substr(eq + 1)), base_dir);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, path.parent_path());
}

const std::map<std::string, std::string, std::less<>>& config_keys() {
  static const std::map<std::string, std::string, std::less<>> keys = [] {
    std::map<std::string, std::string, std::less<>> m;
    for (const auto& [k, spec] : table()) m[k] = spec.help;
    return m;
  }();
  return keys;
}

}  // namespace shapeservo
