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

// Command-line front end: closed-loop runs, method sweeps, feature
// extraction and the synthetic estimator race.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shapeservo/errors.hpp"
#include "shapeservo/geometry.hpp"
#include "shapeservo/harness.hpp"
#include "shapeservo/kernels.hpp"
#include "shapeservo/moments.hpp"
#include "shapeservo/race.hpp"

namespace fs = std::filesystem;
using namespace shapeservo;

namespace {

ScenarioConfig load(const std::string& path, const std::vector<std::string>& overrides,
                    std::optional<std::uint64_t> seed) {
  ScenarioConfig cfg = path.empty() ? ScenarioConfig{} : load_config(path);
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (seed) cfg.seed = *seed;
  cfg.validate();
  return cfg;
}

void write_record(const fs::path& dir, const std::string& stem, const RunRecord& rec,
                  const std::string& format) {
  fs::create_directories(dir);
  if (format == "json") {
    std::ofstream out(dir / (stem + ".json"));
    write_json(out, rec);
  } else {
    std::ofstream out(dir / (stem + ".csv"));
    write_csv(out, rec);
  }
  std::ofstream summary(dir / (stem + "_summary.json"));
  write_summary_json(summary, rec);
}

nlohmann::json array_json(const auto& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto x : a) out.push_back(x);
  return out;
}

std::vector<ControlMethod> parse_methods(const std::string& spec) {
  if (spec == "all") {
    return {ControlMethod::kClassicalRls, ControlMethod::kClassicalLkf, ControlMethod::kLsmc,
            ControlMethod::kFtsmc};
  }
  std::vector<ControlMethod> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_control_method(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contour-moment shape servoing workbench"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string format = "csv";
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;

  auto* run = app.add_subcommand("run", "Run one closed-loop scenario");
  run->add_option("--config", config_path, "Flat key = value config file")->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", format, "Record format")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--seed", seed, "Seed for random initialization");
  run->add_option("--set", overrides, "Override one config key (key=value)");

  std::string methods = "all";
  auto* sweep = app.add_subcommand("sweep", "Run several methods on the same scenario");
  sweep->add_option("--config", config_path, "Flat key = value config file")->check(CLI::ExistingFile);
  sweep->add_option("--methods", methods, "all or a comma list of control methods");
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_option("--format", format, "Record format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--seed", seed, "Seed for random initialization");
  sweep->add_option("--set", overrides, "Override one config key (key=value)");

  std::string contour_path;
  double cam_w = 640.0;
  double cam_h = 480.0;
  auto* features = app.add_subcommand("features", "Print the feature vector of a contour file as JSON");
  features->add_option("--contour", contour_path, "Contour file, one \"u v\" per line")
      ->required()
      ->check(CLI::ExistingFile);
  features->add_option("--width", cam_w, "Image width in pixels");
  features->add_option("--height", cam_h, "Image height in pixels");
  std::size_t resample = 0;
  features->add_option("--points", resample, "Resample to this many points first (0 keeps the input)");

  RaceConfig race_cfg;
  auto* race = app.add_subcommand("race", "Open-loop estimator comparison on a synthetic linear plant");
  race->add_option("--steps", race_cfg.steps, "Number of steps");
  race->add_option("--seed", race_cfg.seed, "Seed for the synthetic Jacobian");
  race->add_option("--out", out_dir, "Output directory");

  app.add_subcommand("keys", "List every config key");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const ScenarioConfig cfg = load(config_path, overrides, seed);
      const RunRecord rec = run_scenario(cfg);
      write_record(out_dir, std::string(control_method_name(rec.method)), rec, format);
      write_summary_json(std::cout, rec);
      return rec.error.empty() ? 0 : 2;
    }
    if (*sweep) {
      const ScenarioConfig cfg = load(config_path, overrides, seed);
      const auto list = parse_methods(methods);
      const auto entries = run_sweep(cfg, list);
      for (const auto& e : entries) {
        write_record(out_dir, std::string(control_method_name(e.method)), e.record, format);
      }
      std::ofstream table(fs::path(out_dir) / "sweep.csv");
      write_sweep_table(table, entries);
      write_sweep_table(std::cout, entries);
      return 0;
    }
    if (*features) {
      Contour c = read_contour_file(contour_path);
      if (resample > 0) c = resample_closed(c, resample);
      const auto f = extract_features_detailed(c, CameraSpec{cam_w, cam_h});
      nlohmann::json j;
      j["points"] = c.size();
      j["kernels"] = kernels::isa_name(kernels::active_kernels().isa);
      j["s"] = array_json(std::vector<double>(f.s.data(), f.s.data() + f.s.size()));
      j["s_bar"] = array_json(f.s_bar);
      j["phi"] = array_json(f.phi);
      j["h"] = array_json(f.moments.h);
      j["eta"] = array_json(f.moments.eta);
      j["moment_order"] = {"00", "10", "01", "20", "11", "02", "30", "21", "12", "03"};
      j["centroid"] = {f.moments.u_bar, f.moments.v_bar};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (app.got_subcommand("race")) {
      fs::create_directories(out_dir);
      std::ofstream out(fs::path(out_dir) / "race.csv");
      out << "method,step,T1,norm_e2,jacobian_error\n";
      std::cout << "method,T1_step10,T1_tail_mean\n";
      for (const auto m : {EstimatorMethod::kRls, EstimatorMethod::kLkf, EstimatorMethod::kLsmc,
                           EstimatorMethod::kFtsmc}) {
        const RaceTrace tr = run_race(race_cfg, m);
        for (std::size_t k = 0; k < tr.t1.size(); ++k) {
          out << estimator_method_name(m) << ',' << k << ',' << tr.t1[k] << ',' << tr.e2_norm[k] << ','
              << tr.jac_error[k] << '\n';
        }
        std::cout << estimator_method_name(m) << ',' << (tr.t1.size() > 10 ? tr.t1[10] : 0.0) << ','
                  << tail_mean(tr.t1, 100) << '\n';
      }
      return 0;
    }
    if (app.got_subcommand("keys")) {
      for (const auto& [k, help] : config_keys()) std::cout << k << "  " << help << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
