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

#ifndef USV_MODEL_OPTIONS_HPP_
#define USV_MODEL_OPTIONS_HPP_

#include "usv/core/types.hpp"

namespace usv {

struct ModelOptions {
  // Coefficient derivation.
  double surge_added_mass_factor = 0.075;  // X_udot = -factor * m
  double sway_reference_speed = 1.0;       // m/s, the bare v in the Y_v row
  double cylinder_drag_coefficient = 1.1;  // C_d

  // Use -(Y_rdot + N_vdot)/2 for both sway-yaw added mass entries. Without it
  // M is not symmetric and energy can grow.
  bool symmetric_added_mass = true;

  // Surge drag is extended linearly (slope X_u) above this speed.
  double drag_cap_speed = 3.2;

  // +1: port hull sees u + r B/2 (rigid body, NED). -1 flips it.
  int hull_velocity_sign = 1;

  // Different surge added mass when decelerating.
  bool switching_added_mass = false;
  double decel_added_mass_ratio = 2.0;  // m_a2 / m_a1

  void validate() const {
    require(surge_added_mass_factor >= 0,
            "model.surge_added_mass_factor must be >= 0");
    require(sway_reference_speed > 0, "model.sway_reference_speed must be > 0");
    require(cylinder_drag_coefficient > 0,
            "model.cylinder_drag_coefficient must be > 0");
    require(drag_cap_speed > 0, "model.drag_cap_speed must be > 0");
    require(hull_velocity_sign == 1 || hull_velocity_sign == -1,
            "model.hull_velocity_sign must be 1 or -1");
    require(decel_added_mass_ratio > 0,
            "model.decel_added_mass_ratio must be > 0");
  }
};

}  // namespace usv

#endif  // USV_MODEL_OPTIONS_HPP_
