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
#include <sstream>

#include <gtest/gtest.h>

#include "usv/io/csv.hpp"
#include "usv/sim/integrator.hpp"
#include "usv/sim/runner.hpp"
#include "usv/sim/scenario.hpp"

namespace usv {
namespace {

const LogRecord& At(const RunLog& log, double t) {
  for (const auto& r : log.records) {
    if (std::abs(r.t - t) < 1e-9) return r;
  }
  throw std::out_of_range("no record at t");
}

TEST(Integrator, RecoversClosedFormCoastDown) {
  // Pure linear surge drag: u(t) = u0 exp(-X_u t / m11).
  auto c = lightship_condition();
  c.X_uu = 0.0;
  VesselModel m(VesselGeometry{}, c);
  SimState s;
  s.nu(0) = 2.0;
  const double m11 = m.mass()(0, 0);
  for (int i = 0; i < 500; ++i) s = integrate_step(s, Vec3::Zero(), m, 0.01);
  EXPECT_NEAR(s.u(), 2.0 * std::exp(-c.X_u * 5.0 / m11), 1e-9);
  const double x = 2.0 * m11 / c.X_u * (1.0 - std::exp(-c.X_u * 5.0 / m11));
  EXPECT_NEAR(s.x(), x, 1e-8);
}

TEST(Integrator, ThrowsOnNonFiniteState) {
  VesselModel m;
  SimState s;
  EXPECT_THROW(integrate_step(s, Vec3(NAN, 0, 0), m, 0.01), NumericalError);
  EXPECT_THROW(integrate_step(s, Vec3::Zero(), m, 0.0), ValidationError);
}

TEST(Integrator, WrapsHeading) {
  VesselModel m;
  SimState s;
  s.eta(2) = kPi - 0.001;
  s.nu(2) = 0.5;
  s = integrate_step(s, Vec3::Zero(), m, 0.01);
  EXPECT_LT(s.psi(), 0.0);
  EXPECT_GT(s.psi(), -kPi);
}

TEST(ScenarioSpec, CollectsEveryProblem) {
  auto s = scenario_variable_mass();
  s.dt = 0.003;
  s.events.front().time = 1e6;
  s.setpoints.front().u_d = -1;
  const auto errs = s.validation_errors();
  EXPECT_GE(errs.size(), 3u);
  EXPECT_THROW(s.validate(), ValidationError);
}

TEST(ScenarioSpec, RejectsMassDropThatAddsMass) {
  auto s = scenario_variable_mass();
  s.events.front().delta_m = -5;
  s.events.front().new_condition.reset();
  EXPECT_FALSE(s.validation_errors().empty());
}

TEST(Builtins, KnownNamesResolve) {
  for (const auto& n : builtin_scenario_names()) {
    const auto s = builtin_scenario(n);
    EXPECT_TRUE(s.validation_errors().empty()) << n;
  }
  EXPECT_THROW(builtin_scenario("nope"), ValidationError);
}

TEST(Builtins, EventProtocolTimes) {
  EXPECT_DOUBLE_EQ(scenario_variable_mass().events.front().time, 78.0);
  EXPECT_DOUBLE_EQ(scenario_variable_drag().events.front().time, 42.0);
  const auto both = scenario_variable_mass_drag();
  ASSERT_EQ(both.events.size(), 2u);
  EXPECT_DOUBLE_EQ(both.events[0].time, 87.0);
  EXPECT_DOUBLE_EQ(both.events[1].time, 87.0);
}

TEST(Runner, LogsEveryTickIncludingBothEnds) {
  auto s = scenario_acceleration(1.0, lightship_condition(), 2.0);
  const auto log = run_scenario(s);
  EXPECT_EQ(log.records.size(), 201u);
  EXPECT_DOUBLE_EQ(log.records.front().t, 0.0);
  EXPECT_DOUBLE_EQ(log.records.back().t, 2.0);
}

TEST(Runner, MassDropKeepsVelocityAndSwitchesPlant) {
  VariableScenarioOptions o;
  o.event_time = 20.0;
  o.post_event = 10.0;
  const auto log = run_scenario(scenario_variable_mass(o));
  const auto& before = At(log, 19.99);
  const auto& at = At(log, 20.0);
  EXPECT_DOUBLE_EQ(before.mass, 246.0);
  EXPECT_DOUBLE_EQ(at.mass, 220.0);
  EXPECT_EQ(at.condition_before, "full");
  EXPECT_EQ(at.condition, "lightship");
  EXPECT_EQ(at.event, "mass_drop");
  EXPECT_NEAR(at.u, before.u, 0.01);
  ASSERT_EQ(log.event_times.size(), 1u);
  EXPECT_DOUBLE_EQ(log.event_times.front(), 20.0);
}

TEST(Runner, TowSlowsTheOpenLoopVessel) {
  auto base = scenario_acceleration(0.6, lightship_condition(), 40.0);
  auto towed = base;
  Event e;
  e.kind = EventKind::kTowAttach;
  e.time = 20.0;
  e.tow_coeff = 84.0;
  towed.events.push_back(e);
  const auto a = run_scenario(base);
  const auto b = run_scenario(towed);
  EXPECT_DOUBLE_EQ(At(a, 20.0).u, At(b, 20.0).u);
  EXPECT_LT(b.records.back().u, a.records.back().u - 0.1);
  EXPECT_DOUBLE_EQ(b.records.back().tow_coeff, 84.0);
}

TEST(Runner, ImpulsePushesForItsDurationOnly) {
  auto s = scenario_acceleration(0.0, lightship_condition(), 5.0);
  Event e;
  e.kind = EventKind::kImpulse;
  e.time = 1.0;
  e.force = 100.0;
  e.duration = 0.5;
  s.events.push_back(e);
  const auto log = run_scenario(s);
  EXPECT_DOUBLE_EQ(At(log, 1.0).u, 0.0);
  EXPECT_GT(At(log, 1.5).u, 0.1);
  // Coasting after the push.
  EXPECT_LT(At(log, 3.0).u, At(log, 1.5).u);
}

TEST(Runner, CommandChangeEvent) {
  auto s = scenario_acceleration(0.0, lightship_condition(), 4.0);
  Event e;
  e.kind = EventKind::kCommandChange;
  e.time = 2.0;
  e.command = MotorCommand{0.5, 0.5};
  s.events.push_back(e);
  const auto log = run_scenario(s);
  EXPECT_DOUBLE_EQ(At(log, 1.99).cmd_port, 0.0);
  EXPECT_DOUBLE_EQ(At(log, 2.0).cmd_port, 0.5);
  EXPECT_GT(log.records.back().u, 0.0);
}

TEST(Runner, SetpointChangeIsMarked) {
  const auto log = run_scenario(scenario_setpoint(1.5, 0.0, 5.0, 45.0, 8.0));
  EXPECT_EQ(At(log, 5.0).event, "setpoint");
  EXPECT_TRUE(At(log, 0.0).event.empty());
}

TEST(Runner, NoiseIsSeeded) {
  auto s = scenario_setpoint(1.0, 0.0, 3.0, 20.0, 6.0);
  s.noise_speed = 0.02;
  s.seed = 5;
  std::ostringstream a, b, c;
  write_runlog_csv(a, run_scenario(s), {});
  write_runlog_csv(b, run_scenario(s), {});
  s.seed = 6;
  write_runlog_csv(c, run_scenario(s), {});
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
}

TEST(Runner, OpenLoopZigZagAlternates) {
  const auto log = run_scenario(scenario_zigzag(lightship_condition(), 7, 28));
  EXPECT_GT(At(log, 6.0).r, 0.0);
  EXPECT_LT(At(log, 13.0).r, 0.0);
}

TEST(Runner, ChannelLookup) {
  const auto log = run_scenario(scenario_acceleration(1.0, lightship_condition(), 1.0));
  EXPECT_EQ(channel(log, "u").size(), log.records.size());
  EXPECT_EQ(channel(log, "saturated").size(), log.records.size());
  EXPECT_THROW(channel(log, "bogus"), ValidationError);
}

}  // namespace
}  // namespace usv
