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

#ifndef USV_ANALYSIS_COMPARE_HPP_
#define USV_ANALYSIS_COMPARE_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "usv/analysis/steady_state.hpp"
#include "usv/core/types.hpp"
#include "usv/sim/runner.hpp"

namespace usv {

// Percent by which a beats b. Positive when a has the smaller error.
inline double lambda_compare(double a, double b) {
  require(a >= 0 && b >= 0, "lambda needs non-negative errors");
  const double m = std::max(a, b);
  if (m == 0) return 0.0;
  return (b - a) / m * 100.0;
}

struct ComparisonRow {
  std::string metric;
  std::string unit;
  double value_a = 0;
  double value_b = 0;
  double lambda = 0;
  std::string winner;  // label of the better run, or "tie"
  bool available = true;
};

struct ComparisonReport {
  std::string label_a, label_b;
  std::string scenario;
  SteadyConfig steady;
  PhaseReport phase_a, phase_b;
  std::vector<ComparisonRow> rows;
};

inline void check_compatible(const RunLog& a, const RunLog& b) {
  auto bad = [](const std::string& why) {
    throw ValidationError("logs are not from the same scenario: " + why);
  };
  if (!a.scenario_hash.empty() && !b.scenario_hash.empty() &&
      a.scenario_hash != b.scenario_hash) {
    bad("scenario hash " + a.scenario_hash + " vs " + b.scenario_hash);
  }
  if (a.scenario != b.scenario) bad("name " + a.scenario + " vs " + b.scenario);
  if (a.records.size() != b.records.size()) bad("different lengths");
  if (a.records.empty()) bad("empty log");
  if (a.event_times != b.event_times) bad("different event times");
  for (size_t i = 0; i < a.records.size(); ++i) {
    const auto& p = a.records[i];
    const auto& q = b.records[i];
    if (p.t != q.t || p.u_d != q.u_d || p.psi_d != q.psi_d) {
      bad("time base or setpoints differ at row " + std::to_string(i));
    }
  }
}

// Rows in the usual table order: speed before, percent, speed after,
// percent, heading before, heading after.
inline ComparisonReport compare_controllers(const RunLog& a, const RunLog& b,
                                            const SteadyConfig& cfg = {},
                                            std::string label_a = "",
                                            std::string label_b = "") {
  check_compatible(a, b);
  ComparisonReport rep;
  rep.label_a = label_a.empty() ? a.controller : label_a;
  rep.label_b = label_b.empty() ? b.controller : label_b;
  if (rep.label_a == rep.label_b) {
    rep.label_a += "_A";
    rep.label_b += "_B";
  }
  rep.scenario = a.scenario;
  rep.steady = cfg;
  rep.phase_a = phase_metrics(a, cfg);
  rep.phase_b = phase_metrics(b, cfg);

  auto row = [&rep](const char* name, const char* unit, double va, double vb,
                    bool avail) {
    ComparisonRow r;
    r.metric = name;
    r.unit = unit;
    r.value_a = va;
    r.value_b = vb;
    r.available = avail;
    r.lambda = avail ? lambda_compare(va, vb) : 0.0;
    r.winner = !avail         ? "n/a"
               : r.lambda > 0 ? rep.label_a
               : r.lambda < 0 ? rep.label_b
                              : "tie";
    rep.rows.push_back(r);
  };
  const auto& A = rep.phase_a;
  const auto& B = rep.phase_b;
  const bool sb = A.before.has_speed && B.before.has_speed;
  const bool sa = A.after.has_speed && B.after.has_speed;
  const bool hb = A.before.has_heading && B.before.has_heading;
  const bool ha = A.after.has_heading && B.after.has_heading;
  row("steady_speed_error_before", "m/s", A.before.speed.speed_error,
      B.before.speed.speed_error, sb);
  row("percent_error_before", "%", A.before.speed.percent_error,
      B.before.speed.percent_error, sb);
  row("steady_speed_error_after", "m/s", A.after.speed.speed_error,
      B.after.speed.speed_error, sa);
  row("percent_error_after", "%", A.after.speed.percent_error,
      B.after.speed.percent_error, sa);
  row("steady_heading_error_before", "deg", A.before.heading.heading_error,
      B.before.heading.heading_error, hb);
  row("steady_heading_error_after", "deg", A.after.heading.heading_error,
      B.after.heading.heading_error, ha);
  return rep;
}

}  // namespace usv

#endif  // USV_ANALYSIS_COMPARE_HPP_
