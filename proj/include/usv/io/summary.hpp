// Copyright 2026 The usvsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef USV_IO_SUMMARY_HPP_
#define USV_IO_SUMMARY_HPP_

#include <string>

#include "json.hpp"
#include "usv/analysis/compare.hpp"
#include "usv/analysis/steady_state.hpp"
#include "usv/io/csv.hpp"
#include "usv/io/format.hpp"
#include "usv/sim/runner.hpp"

namespace usv {

inline nlohmann::ordered_json to_json(const WindowErrors& w, bool available) {
  nlohmann::ordered_json j;
  j["available"] = available;
  j["speed_error"] = w.speed_error;
  j["percent_error"] = w.percent_error;
  j["heading_error_deg"] = w.heading_error;
  j["samples"] = w.samples;
  return j;
}

inline nlohmann::ordered_json to_json(const SteadyConfig& c) {
  nlohmann::ordered_json j;
  j["window_s"] = c.window;
  j["speed_tol"] = c.speed_tol;
  j["heading_tol_deg"] = rad2deg(c.heading_tol);
  j["exclusion_s"] = c.exclusion;
  return j;
}

inline nlohmann::ordered_json to_json(const PhaseReport& p) {
  nlohmann::ordered_json j;
  j["split_time"] = p.split;
  j["before"]["speed"] = to_json(p.before.speed, p.before.has_speed);
  j["before"]["heading"] = to_json(p.before.heading, p.before.has_heading);
  j["after"]["speed"] = to_json(p.after.speed, p.after.has_speed);
  j["after"]["heading"] = to_json(p.after.heading, p.after.has_heading);
  return j;
}

inline nlohmann::ordered_json run_summary(const RunLog& log,
                                          const OutputMeta& meta,
                                          const SteadyConfig& steady) {
  nlohmann::ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  j["config_hash"] = meta.config_hash;
  j["scenario_hash"] = meta.scenario_hash;
  j["scenario"] = log.scenario;
  j["controller"] = log.controller;
  j["dt"] = log.dt;
  j["tick"] = log.tick;
  j["records"] = log.records.size();
  const auto& f = log.records.back();
  j["final_state"] = {{"t", f.t},   {"x", f.x}, {"y", f.y},
                      {"psi", f.psi}, {"u", f.u}, {"v", f.v},
                      {"r", f.r},   {"condition", f.condition},
                      {"mass", f.mass}};
  j["event_times"] = log.event_times;
  j["steady_state"] = to_json(steady);
  j["metrics"] = to_json(phase_metrics(log, steady));
  int sat = 0, paused = 0;
  for (const auto& r : log.records) {
    sat += r.saturated;
    paused += r.adapt_paused;
  }
  j["saturated_ticks"] = sat;
  j["adapt_paused_ticks"] = paused;
  return j;
}

inline nlohmann::ordered_json report_json(const ComparisonReport& rep,
                                          const std::string& hash_a,
                                          const std::string& hash_b) {
  nlohmann::ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  j["scenario"] = rep.scenario;
  j["label_a"] = rep.label_a;
  j["label_b"] = rep.label_b;
  j["scenario_hash_a"] = hash_a;
  j["scenario_hash_b"] = hash_b;
  j["steady_state"] = to_json(rep.steady);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"metric", r.metric},
                    {"unit", r.unit},
                    {"available", r.available},
                    {"a", r.value_a},
                    {"b", r.value_b},
                    {"lambda_percent", r.lambda},
                    {"winner", r.winner}});
  }
  j["rows"] = rows;
  return j;
}

}  // namespace usv

#endif  // USV_IO_SUMMARY_HPP_
