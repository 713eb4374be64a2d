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

#include <array>
#include <charconv>
#include <string>

#include <json.hpp>

#include "shapeservo/harness.hpp"

namespace shapeservo {
namespace {

// Shortest round-trip representation, identical across runs.
std::string num(double x) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

template <class V>
void put_vec(std::ostream& out, const V& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out << ',' << num(v[i]);
}

nlohmann::json vec_json(const auto& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

nlohmann::json metrics_json(const RunRecord& rec) {
  const Metrics& m = rec.metrics;
  nlohmann::json j;
  j["method"] = std::string(control_method_name(rec.method));
  j["converged"] = rec.converged;
  j["T_max_steps"] = m.t_max_steps;
  j["threshold_reached"] = m.threshold_reached;
  j["t_d"] = m.t_d ? nlohmann::json(*m.t_d) : nlohmann::json("not reached");
  j["t_d_steps"] = m.t_d_steps ? nlohmann::json(*m.t_d_steps) : nlohmann::json("not reached");
  j["t_s"] = m.t_s ? nlohmann::json(*m.t_s) : nlohmann::json("not reached");
  j["IAE"] = m.iae;
  j["steps"] = rec.ticks.empty() ? 0 : rec.ticks.back().step;
  j["final_norm_e1"] = rec.ticks.empty() ? 0.0 : rec.ticks.back().e1.norm();
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

}  // namespace

void write_csv(std::ostream& out, const RunRecord& rec) {
  out << "# shapeservo run record v1\n";
  out << "t";
  for (const char* name : {"x1", "y1", "th1", "x2", "y2", "th2"}) out << ",r_" << name;
  for (const char* name : {"x1", "y1", "th1", "x2", "y2", "th2"}) out << ",u_" << name;
  for (int i = 1; i <= 10; ++i) out << ",s" << i;
  for (int i = 1; i <= 10; ++i) out << ",e1_" << i;
  out << ",norm_e1,norm_e2,norm_sigma1,norm_sigma2,T1,beta_hat\n";
  for (const auto& t : rec.ticks) {
    out << num(t.t);
    put_vec(out, t.r);
    put_vec(out, t.u);
    put_vec(out, t.s);
    put_vec(out, t.e1);
    out << ',' << num(t.e1.norm()) << ',' << num(t.e2.norm()) << ',' << num(t.sigma1.norm()) << ','
        << num(t.sigma2.norm()) << ',' << num(t.t1) << ',' << num(t.beta_hat) << '\n';
  }
}

void write_json(std::ostream& out, const RunRecord& rec) {
  nlohmann::json j;
  j["schema"] = "shapeservo-run-v1";
  j["summary"] = metrics_json(rec);
  j["s_target"] = vec_json(rec.s_target);
  nlohmann::json ticks = nlohmann::json::array();
  for (const auto& t : rec.ticks) {
    ticks.push_back({{"t", t.t},
                     {"r", vec_json(t.r)},
                     {"u", vec_json(t.u)},
                     {"s", vec_json(t.s)},
                     {"s_hat", vec_json(t.s_hat)},
                     {"e1", vec_json(t.e1)},
                     {"e2", vec_json(t.e2)},
                     {"sigma1", vec_json(t.sigma1)},
                     {"sigma2", vec_json(t.sigma2)},
                     {"T1", t.t1},
                     {"beta_hat", t.beta_hat}});
  }
  j["ticks"] = std::move(ticks);
  out << j.dump(1) << '\n';
}

void write_summary_json(std::ostream& out, const RunRecord& rec) {
  out << metrics_json(rec).dump(2) << '\n';
}

void write_sweep_table(std::ostream& out, std::span<const SweepEntry> entries) {
  out << "method,converged,T_max_steps,t_d,t_s,IAE,final_norm_e1,error\n";
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string("not reached"); };
  for (const auto& e : entries) {
    const Metrics& m = e.record.metrics;
    const double final_err = e.record.ticks.empty() ? 0.0 : e.record.ticks.back().e1.norm();
    out << control_method_name(e.method) << ',' << (e.record.converged ? "true" : "false") << ','
        << m.t_max_steps << ',' << opt(m.t_d) << ',' << opt(m.t_s) << ',' << num(m.iae) << ','
        << num(final_err) << ',' << '"' << e.record.error << '"' << '\n';
  }
}

}  // namespace shapeservo
