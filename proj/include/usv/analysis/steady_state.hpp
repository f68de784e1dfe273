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

#ifndef USV_ANALYSIS_STEADY_STATE_HPP_
#define USV_ANALYSIS_STEADY_STATE_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "usv/core/types.hpp"
#include "usv/sim/runner.hpp"

namespace usv {

struct SteadyConfig {
  double window = 10.0;          // s
  double speed_tol = 0.02;       // m/s, rolling std
  double heading_tol = deg2rad(0.5);
  double exclusion = 5.0;        // s after each event
};

struct SteadyWindow {
  double start = 0;
  double end = 0;
  size_t first = 0, last = 0;  // record indices, inclusive
  double mean_u_error = 0;     // m/s
  double mean_psi_error = 0;   // deg
  double std_u = 0;            // std of the detected channel
  std::vector<std::pair<double, double>> excluded;
};

struct WindowErrors {
  double speed_error = 0;    // m/s
  double heading_error = 0;  // deg
  double percent_error = 0;  // 100 * speed_error / u_d
  size_t samples = 0;
};

// Errors over records [first, last].
inline WindowErrors errors_over(const RunLog& log, size_t first, size_t last) {
  require(first <= last && last < log.records.size(),
          "steady window is empty or outside the log");
  WindowErrors w;
  double su = 0, sp = 0, sud = 0;
  for (size_t i = first; i <= last; ++i) {
    const auto& r = log.records[i];
    su += std::abs(r.u - r.u_d);
    sp += std::abs(rad2deg(heading_error(r.psi, r.psi_d)));
    sud += r.u_d;
  }
  w.samples = last - first + 1;
  const double n = static_cast<double>(w.samples);
  w.speed_error = su / n;
  w.heading_error = sp / n;
  w.percent_error = sud > 0 ? 100.0 * su / sud : 0.0;
  return w;
}

// Maximal runs where a trailing window of the channel has std below tol,
// with the post-event exclusion zones cut out. Windows never straddle an
// event.
inline std::vector<SteadyWindow> detect_steady_state(
    const RunLog& log, std::string_view channel_name, double window,
    double tol, double exclusion = 5.0) {
  require(!log.records.empty(), "log is empty");
  require(window > 0, "steady window must be > 0");
  require(tol > 0, "steady tolerance must be > 0");
  std::vector<double> x = channel(log, channel_name);
  if (channel_name == "psi") {
    // Unwrap so a heading near +-pi is not seen as a jump.
    for (size_t i = 1; i < x.size(); ++i) {
      x[i] = x[i - 1] + wrap_angle(x[i] - x[i - 1]);
    }
  }
  const size_t N = x.size();
  const double tick = N > 1 ? log.records[1].t - log.records[0].t : 1.0;
  const size_t n = std::max<size_t>(
      2, static_cast<size_t>(std::llround(window / tick)));
  std::vector<char> ok(N, 0);
  if (N >= n) {
    // Shifted cumulative sums keep the variance well conditioned.
    const double x0 = x[0];
    std::vector<double> c1(N + 1, 0.0), c2(N + 1, 0.0);
    for (size_t i = 0; i < N; ++i) {
      const double d = x[i] - x0;
      c1[i + 1] = c1[i] + d;
      c2[i + 1] = c2[i] + d * d;
    }
    const double dn = static_cast<double>(n);
    for (size_t i = 0; i + n <= N; ++i) {
      const double m = (c1[i + n] - c1[i]) / dn;
      const double var = std::max(0.0, (c2[i + n] - c2[i]) / dn - m * m);
      if (std::sqrt(var) < tol) {
        std::fill(ok.begin() + static_cast<long>(i),
                  ok.begin() + static_cast<long>(i + n), 1);
      }
    }
  }
  std::vector<std::pair<double, double>> zones;
  std::vector<char> boundary(N, 0);
  for (double te : log.event_times) {
    zones.emplace_back(te, te + exclusion);
    for (size_t i = 0; i < N; ++i) {
      const double t = log.records[i].t;
      if (t >= te - 1e-9 && t < te + exclusion - 1e-9) ok[i] = 0;
    }
    for (size_t i = 0; i < N; ++i) {
      if (log.records[i].t >= te - 1e-9) {
        boundary[i] = 1;
        break;
      }
    }
  }

  std::vector<SteadyWindow> out;
  size_t i = 0;
  while (i < N) {
    if (!ok[i]) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < N && ok[j + 1] && !boundary[j + 1]) ++j;
    if (j > i) {
      SteadyWindow w;
      w.first = i;
      w.last = j;
      w.start = log.records[i].t;
      w.end = log.records[j].t;
      const auto e = errors_over(log, i, j);
      w.mean_u_error = e.speed_error;
      w.mean_psi_error = e.heading_error;
      double m = 0;
      for (size_t q = i; q <= j; ++q) m += x[q];
      m /= static_cast<double>(j - i + 1);
      double v = 0;
      for (size_t q = i; q <= j; ++q) v += (x[q] - m) * (x[q] - m);
      w.std_u = std::sqrt(v / static_cast<double>(j - i + 1));
      w.excluded = zones;
      out.push_back(std::move(w));
    }
    i = j + 1;
  }
  return out;
}

inline std::vector<WindowErrors> steady_errors(
    const RunLog& log, const std::vector<SteadyWindow>& windows) {
  std::vector<WindowErrors> out;
  out.reserve(windows.size());
  for (const auto& w : windows) out.push_back(errors_over(log, w.first, w.last));
  return out;
}

// Sample weighted mean over several windows.
inline WindowErrors pooled(const std::vector<WindowErrors>& ws) {
  WindowErrors p;
  double su = 0, sp = 0, spc = 0;
  for (const auto& w : ws) {
    const double n = static_cast<double>(w.samples);
    su += w.speed_error * n;
    sp += w.heading_error * n;
    spc += w.percent_error * n;
    p.samples += w.samples;
  }
  if (p.samples == 0) return p;
  const double n = static_cast<double>(p.samples);
  p.speed_error = su / n;
  p.heading_error = sp / n;
  p.percent_error = spc / n;
  return p;
}

struct PhaseMetrics {
  WindowErrors speed;    // from windows on the speed channel
  WindowErrors heading;  // from windows on the heading channel
  bool has_speed = false;
  bool has_heading = false;
};

struct PhaseReport {
  PhaseMetrics before;
  PhaseMetrics after;
  double split = 0;  // first event time, or end of log
};

// Splits at the first event and pools the steady windows on each side.
inline PhaseReport phase_metrics(const RunLog& log,
                                 const SteadyConfig& cfg = {}) {
  PhaseReport rep;
  rep.split = log.event_times.empty() ? log.records.back().t + 1.0
                                      : log.event_times.front();
  auto fill = [&](std::string_view ch, double tol, bool speed) {
    const auto ws = detect_steady_state(log, ch, cfg.window, tol,
                                        cfg.exclusion);
    std::vector<WindowErrors> pre, post;
    for (const auto& w : ws) {
      const auto e = errors_over(log, w.first, w.last);
      (w.start < rep.split ? pre : post).push_back(e);
    }
    auto& b = speed ? rep.before.speed : rep.before.heading;
    auto& a = speed ? rep.after.speed : rep.after.heading;
    b = pooled(pre);
    a = pooled(post);
    (speed ? rep.before.has_speed : rep.before.has_heading) = !pre.empty();
    (speed ? rep.after.has_speed : rep.after.has_heading) = !post.empty();
  };
  fill("u", cfg.speed_tol, true);
  fill("psi", cfg.heading_tol, false);
  return rep;
}

}  // namespace usv

#endif  // USV_ANALYSIS_STEADY_STATE_HPP_
