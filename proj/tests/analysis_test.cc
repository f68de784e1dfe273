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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "usv/analysis/compare.hpp"
#include "usv/analysis/fit.hpp"
#include "usv/analysis/steady_state.hpp"
#include "usv/model/dynamics.hpp"

namespace usv {
namespace {

// Synthetic log: u relaxes to u_d + bias, with an optional event.
RunLog MakeLog(double bias, double tau, double event_at = -1,
               double bias_after = 0.0, double duration = 100.0) {
  RunLog log;
  log.scenario = "synthetic";
  log.controller = "x";
  log.tick = 0.1;
  const int n = static_cast<int>(std::lround(duration / log.tick));
  for (int i = 0; i <= n; ++i) {
    LogRecord r;
    r.t = i * log.tick;
    r.u_d = 1.0;
    r.psi_d = 0.0;
    double b = bias;
    double t0 = 0.0;
    if (event_at >= 0 && r.t >= event_at) {
      b = bias_after;
      t0 = event_at;
    }
    r.u = 1.0 + b + 0.5 * std::exp(-(r.t - t0) / tau);
    r.psi = 0.0;
    if (event_at >= 0 && std::abs(r.t - event_at) < 1e-9) {
      r.event = "tow_attach";
      log.event_times.push_back(r.t);
    }
    log.records.push_back(r);
  }
  return log;
}

TEST(Lambda, Definition) {
  EXPECT_NEAR(lambda_compare(0.070, 0.24), 70.8, 0.05);
  EXPECT_NEAR(lambda_compare(0.41, 1.9), 78.4, 0.05);
  EXPECT_DOUBLE_EQ(lambda_compare(0.3, 0.1), -(0.2 / 0.3) * 100.0);
  EXPECT_DOUBLE_EQ(lambda_compare(0.0, 0.0), 0.0);
  EXPECT_THROW(lambda_compare(-1.0, 0.2), ValidationError);
}

TEST(SteadyState, FindsTheSettledTail) {
  const auto log = MakeLog(0.03, 2.0);
  const auto ws = detect_steady_state(log, "u", 10.0, 0.002);
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_GT(ws[0].start, 5.0);
  EXPECT_DOUBLE_EQ(ws[0].end, 100.0);
  EXPECT_NEAR(ws[0].mean_u_error, 0.03, 1e-3);
}

TEST(SteadyState, EventSplitsWindowsAndExcludes) {
  const auto log = MakeLog(0.03, 1.0, 50.0, 0.08);
  const auto ws = detect_steady_state(log, "u", 10.0, 0.002, 5.0);
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_LT(ws[0].end, 50.0);
  EXPECT_GE(ws[1].start, 55.0 - 1e-9);
  EXPECT_NEAR(ws[1].mean_u_error, 0.08, 1e-3);
  const auto rep = phase_metrics(log, {10.0, 0.002, deg2rad(0.5), 5.0});
  EXPECT_DOUBLE_EQ(rep.split, 50.0);
  EXPECT_TRUE(rep.before.has_speed);
  EXPECT_TRUE(rep.after.has_speed);
  EXPECT_NEAR(rep.after.speed.percent_error, 8.0, 0.1);
}

TEST(SteadyState, NothingSteadyIsReported) {
  const auto log = MakeLog(0.0, 1e6);
  auto copy = log;
  for (size_t i = 0; i < copy.records.size(); ++i) {
    copy.records[i].u = std::sin(0.5 * copy.records[i].t);
  }
  EXPECT_TRUE(detect_steady_state(copy, "u", 10.0, 0.01).empty());
  EXPECT_FALSE(phase_metrics(copy).before.has_speed);
}

TEST(SteadyState, HeadingUnwrapsAcrossPi) {
  auto log = MakeLog(0.0, 1.0);
  for (size_t i = 0; i < log.records.size(); ++i) {
    log.records[i].psi = wrap_angle(kPi + (i % 2 ? 1e-4 : -1e-4));
    log.records[i].psi_d = kPi;
  }
  const auto ws = detect_steady_state(log, "psi", 10.0, deg2rad(0.5));
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_LT(ws[0].mean_psi_error, 0.01);
}

TEST(Compare, RowsAndWinner) {
  const auto a = MakeLog(0.01, 1.0, 50.0, 0.01);
  auto b = MakeLog(0.05, 1.0, 50.0, 0.09);
  b.controller = "y";
  const auto rep = compare_controllers(a, b, {10.0, 0.002, deg2rad(0.5), 5.0});
  ASSERT_EQ(rep.rows.size(), 6u);
  EXPECT_EQ(rep.rows[0].metric, "steady_speed_error_before");
  EXPECT_EQ(rep.rows[2].metric, "steady_speed_error_after");
  EXPECT_NEAR(rep.rows[2].lambda, (0.09 - 0.01) / 0.09 * 100, 1.5);
  EXPECT_EQ(rep.rows[2].winner, "x");
}

TEST(Compare, RejectsMismatchedLogs) {
  const auto a = MakeLog(0.01, 1.0, 50.0, 0.01);
  auto b = MakeLog(0.01, 1.0, 40.0, 0.01);
  EXPECT_THROW(compare_controllers(a, b), ValidationError);
  auto c = a;
  c.records.pop_back();
  EXPECT_THROW(compare_controllers(a, c), ValidationError);
}

TEST(FitDrag, RecoversEveryLoadingExactly) {
  for (const auto& c :
       {slick_condition(), lightship_condition(), full_condition()}) {
    std::vector<DragPoint> pts;
    for (double u = 0.25; u <= 3.2; u += 0.25) {
      pts.push_back({u, c.X_u * u + c.X_uu * u * u});
    }
    const auto f = fit_drag_quadratic(pts);
    EXPECT_NEAR(f.X_u, c.X_u, 1e-9 * std::abs(c.X_u));
    EXPECT_NEAR(f.X_uu, c.X_uu, 1e-9 * std::abs(c.X_uu));
    EXPECT_LT(f.residual_rms, 1e-9);
  }
}

TEST(FitDrag, NoisyFitIsUnbiased) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 0.5);
  std::vector<DragPoint> pts;
  for (int k = 0; k < 2000; ++k) {
    const double u = 0.2 + 3.0 * (k % 100) / 100.0;
    pts.push_back({u, 55.771 * u - 6.9627 * u * u + n(rng)});
  }
  const auto f = fit_drag_quadratic(pts);
  EXPECT_NEAR(f.X_u, 55.771, 0.2);
  EXPECT_NEAR(f.X_uu, -6.9627, 0.1);
  EXPECT_NEAR(f.residual_rms, 0.5, 0.05);
}

TEST(FitDrag, RankDeficientAndTooFew) {
  EXPECT_THROW(fit_drag_quadratic({{1.0, 50.0}, {1.0, 51.0}, {1.0, 49.0}}),
               ValidationError);
  EXPECT_THROW(fit_drag_quadratic({{1.0, 50.0}, {2.0, 80.0}}),
               ValidationError);
}

TEST(FitTow, SingleAnchorAndRangeFlags) {
  const auto f = fit_tow_drag({{1.0, 84.0}});
  EXPECT_DOUBLE_EQ(f.c_t, 84.0);
  EXPECT_TRUE(f.out_of_range.empty());
  const auto g = fit_tow_drag({{0.6, 84 * 0.36}, {1.2, 84 * 1.44}, {2.0, 336}});
  EXPECT_NEAR(g.c_t, 84.0, 1e-9);
  ASSERT_EQ(g.out_of_range.size(), 1u);
  EXPECT_EQ(g.out_of_range[0], 2u);
  EXPECT_THROW(fit_tow_drag({}), ValidationError);
  EXPECT_THROW(fit_tow_drag({{0.0, 1.0}}), ValidationError);
}

TEST(FitThrust, RecoversPumpCoefficients) {
  std::vector<ThrustPoint> pts;
  for (double u : {0.0, 1.0, 2.0, 2.8}) {
    for (double n : {0.4, 0.7, 1.0}) {
      pts.push_back({u, n, 102.0 * n * n - 18.3 * u * n});
    }
  }
  const auto f = fit_thrust_model(pts);
  EXPECT_NEAR(f.a2, 102.0, 1e-9);
  EXPECT_NEAR(f.a1, -18.3, 1e-9);
}

}  // namespace
}  // namespace usv
