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

#include <gtest/gtest.h>

#include "usv/model/dynamics.hpp"
#include "usv/propulsion/thruster.hpp"

namespace usv {
namespace {

TEST(Bollard, LinearInCommandAndClamped) {
  EXPECT_DOUBLE_EQ(bollard_thrust(0.5), 51.0);
  EXPECT_DOUBLE_EQ(bollard_thrust(1.7), 102.0);
  EXPECT_DOUBLE_EQ(bollard_thrust(-0.2), 0.0);
}

TEST(PumpAnalog, DecaysWithSpeedAndNeverPulls) {
  ThrusterModel m;
  m.variant = ThrusterVariant::kPumpAnalog;
  m.a2 = 102.0;
  m.a1 = -20.0;
  EXPECT_DOUBLE_EQ(pump_analog_thrust(1.0, 0.0, m), 102.0);
  EXPECT_DOUBLE_EQ(pump_analog_thrust(1.0, 2.0, m), 62.0);
  EXPECT_DOUBLE_EQ(pump_analog_thrust(0.5, 2.0, m), 25.5 - 20.0);
  EXPECT_DOUBLE_EQ(pump_analog_thrust(0.1, 3.0, m), 0.0);
}

TEST(PumpAnalog, CalibrationBalancesDragAtTargetSpeed) {
  for (const auto& c : {lightship_condition(), full_condition()}) {
    const double target = *c.top_speed;
    const auto m = calibrated_pump_model(204.0, target, c);
    const double thrust = 2.0 * pump_analog_thrust(1.0, target, m);
    EXPECT_NEAR(thrust, surge_drag(c, target), 1e-9);
    EXPECT_LT(m.a1, 0.0);
  }
}

TEST(PumpAnalog, CalibrationRejectsInfeasibleTarget) {
  EXPECT_THROW(calibrate_thrust_decay(204.0, 9.0, lightship_condition()),
               ValidationError);
  EXPECT_THROW(calibrate_thrust_decay(204.0, 0.0, lightship_condition()),
               ValidationError);
}

TEST(Allocation, InvertsCombine) {
  const double B = 1.83;
  const auto a = allocate(120.0, 15.0, B);
  const auto tau = combine(a.port, a.stbd, B);
  EXPECT_NEAR(tau(0), 120.0, 1e-12);
  EXPECT_NEAR(tau(2), 15.0, 1e-12);
  EXPECT_EQ(tau(1), 0.0);
}

TEST(Allocation, ClampsButKeepsRawValues) {
  const auto a = allocate(300.0, -40.0, 1.83);
  EXPECT_GT(a.stbd_raw, 102.0);
  EXPECT_DOUBLE_EQ(a.stbd, 102.0);
  const auto b = allocate(10.0, 50.0, 1.83);
  EXPECT_LT(b.stbd_raw, 0.0);
  EXPECT_DOUBLE_EQ(b.stbd, 0.0);
}

TEST(ThrustToCommand, RoundTripsBothVariants) {
  ThrusterModel lin;
  EXPECT_NEAR(bollard_thrust(thrust_to_command(40.0, 1.0, lin)), 40.0, 1e-12);
  const auto pump = calibrated_pump_model(204.0, 2.8, lightship_condition());
  for (double u : {0.0, 0.7, 1.9}) {
    for (double T : {5.0, 30.0, 60.0}) {
      const double n = thrust_to_command(T, u, pump);
      EXPECT_NEAR(pump_analog_thrust(n, u, pump), T, 1e-9) << u << " " << T;
    }
  }
  EXPECT_DOUBLE_EQ(thrust_to_command(1e6, 1.0, pump), 1.0);
  EXPECT_DOUBLE_EQ(thrust_to_command(-3.0, 1.0, pump), 0.0);
}

TEST(ThrusterModel, Validate) {
  ThrusterModel m;
  m.variant = ThrusterVariant::kPumpAnalog;
  m.a1 = 3.0;
  EXPECT_THROW(m.validate(), ValidationError);
  EXPECT_THROW(thruster_variant_from_string("sail"), ValidationError);
  EXPECT_EQ(thruster_variant_from_string("pump"), ThrusterVariant::kPumpAnalog);
}

}  // namespace
}  // namespace usv
