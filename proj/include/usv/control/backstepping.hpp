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

#ifndef USV_CONTROL_BACKSTEPPING_HPP_
#define USV_CONTROL_BACKSTEPPING_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "usv/core/types.hpp"
#include "usv/model/dynamics.hpp"
#include "usv/propulsion/thruster.hpp"

namespace usv {

struct ControllerGains {
  double k_u = 8.0;
  double k1 = 0.1;
  double k2 = 1.0;
  double k_a_max = 1.2;
  double u_dot_a_max = 1.0;
  double gamma = 0.05;
  double surge_scale = 0.5;
  double yaw_scale = 0.05;
  double yaw_speed_ratio = 0.5;  // u_d_yaw = ratio * u_d
  double heading_speed_decay = 5.73;

  void validate() const {
    require(k_u > 0, "controller.k_u must be > 0");
    require(k1 > 0, "controller.k1 must be > 0");
    require(k2 > 0, "controller.k2 must be > 0");
    require(k_a_max > 0, "controller.k_a_max must be > 0");
    require(u_dot_a_max > 0, "controller.u_dot_a_max must be > 0");
    require(gamma > 0, "controller.gamma must be > 0");
    require(surge_scale > 0, "controller.surge_scale must be > 0");
    require(yaw_scale > 0, "controller.yaw_scale must be > 0");
    require(yaw_speed_ratio >= 0 && yaw_speed_ratio <= 1,
            "controller.yaw_speed_ratio must lie in [0, 1]");
    require(heading_speed_decay >= 0,
            "controller.heading_speed_decay must be >= 0");
  }
};

struct Setpoint {
  double u_d = 0;    // m/s
  double psi_d = 0;  // rad
  double u_d_yaw = 0;
};

inline Setpoint make_setpoint(double u_d, double psi_d,
                              const ControllerGains& g) {
  return {u_d, wrap_angle(psi_d), g.yaw_speed_ratio * u_d};
}

inline double heading_error(double psi, double psi_d) {
  return wrap_angle(psi - psi_d);
}

struct ShapedAccel {
  double u_d_ref;
  double u_dot_d;
};

// Speed drops toward u_d_yaw while the heading error is large.
inline ShapedAccel shape_desired_accel(double u, const Setpoint& sp,
                                       double e_psi,
                                       const ControllerGains& g) {
  ShapedAccel s;
  s.u_d_ref = std::min(
      sp.u_d_yaw + (sp.u_d - sp.u_d_yaw) *
                       std::exp(-g.heading_speed_decay * std::abs(e_psi)),
      sp.u_d);
  s.u_dot_d =
      g.u_dot_a_max * std::tanh(g.k_a_max * (s.u_d_ref - u) / g.u_dot_a_max);
  return s;
}

// Assumed surge resistance, same sign convention as the plant.
inline double assumed_drag(const HydroCoefficients& k, double u,
                           double cap = 3.2) {
  DisplacementCondition c;
  c.X_u = k.X_u;
  c.X_uu = k.X_uu;
  return surge_drag(c, u, cap);
}

inline double bs_surge(const Vec3& nu, double u_dot_d, double e_u,
                       const HydroCoefficients& k, const ControllerGains& g,
                       double cap = 3.2) {
  const double xi = u_dot_d - g.k_u * e_u;
  const double tau = (k.m - k.X_udot) * xi - (k.m - k.Y_vdot) * nu(1) * nu(2) +
                     assumed_drag(k, nu(0), cap);
  return tau * g.surge_scale;
}

inline double bs_heading(const Vec3& nu, double e_psi, double e_psi_dot,
                         const HydroCoefficients& k,
                         const ControllerGains& g) {
  const double tau = (k.I_z - k.N_rdot) * (-g.k1 * e_psi - g.k2 * e_psi_dot) -
                     (-k.X_udot + k.Y_vdot) * nu(0) * nu(1) - k.N_r * nu(2);
  return tau * g.yaw_scale;
}

// kReduced is the decoupled surge/yaw law. kFullModel inverts the coupled
// surge and yaw rows of the assumed model so u_dot and r_dot hit the
// virtual inputs exactly.
enum class Linearization { kReduced, kFullModel };

inline std::string_view to_string(Linearization l) {
  return l == Linearization::kReduced ? "reduced" : "full";
}

inline Linearization linearization_from_string(std::string_view s) {
  if (s == "reduced") return Linearization::kReduced;
  if (s == "full") return Linearization::kFullModel;
  throw ValidationError("unknown linearization '" + std::string(s) +
                        "' (expected reduced or full)");
}

// (tau_x, tau_z) giving u_dot = xi_u and r_dot = xi_r for the model, with
// tau_y = 0.
inline std::pair<double, double> full_model_inverse(const VesselModel& model,
                                                    const Vec3& nu,
                                                    double xi_u, double xi_r) {
  const Mat3 W = model.mass().inverse();
  const Vec3 q = W * model.bias_forces(nu);
  Eigen::Matrix2d A;
  A << W(0, 0), W(0, 2),
       W(2, 0), W(2, 2);
  const Eigen::Vector2d rhs(xi_u + q(0), xi_r + q(2));
  const Eigen::Vector2d t = A.partialPivLu().solve(rhs);
  return {t(0), t(1)};
}

struct ControlOutput {
  double tau_x = 0;
  double tau_z = 0;
  double e_u = 0;       // u - desired speed trajectory (BS) or u - u_m (ABS)
  double e_psi = 0;
  double u_d_ref = 0;
  double u_d_traj = 0;  // BS desired speed at this tick
  double u_dot_d = 0;
};

// Backstepping speed/heading controller. The desired speed is a trajectory
// driven by the shaped acceleration, so e_u is measured against it.
class BacksteppingController {
 public:
  BacksteppingController(const VesselModel& assumed,
                         const ControllerGains& gains,
                         Linearization mode = Linearization::kReduced)
      : model_(assumed), gains_(gains), mode_(mode) {
    gains_.validate();
  }

  void reset(double u0) { u_traj_ = u0; }
  double speed_trajectory() const { return u_traj_; }
  const ControllerGains& gains() const { return gains_; }

  ControlOutput step(const SimState& s, const Setpoint& sp, double tick) {
    ControlOutput out;
    const auto k = model_.coefficients(s.nu);
    out.e_psi = heading_error(s.psi(), sp.psi_d);
    const auto shaped = shape_desired_accel(u_traj_, sp, out.e_psi, gains_);
    out.u_d_ref = shaped.u_d_ref;
    out.u_dot_d = shaped.u_dot_d;
    out.u_d_traj = u_traj_;
    out.e_u = s.u() - u_traj_;
    const double cap = model_.options().drag_cap_speed;
    if (mode_ == Linearization::kReduced) {
      out.tau_x = bs_surge(s.nu, shaped.u_dot_d, out.e_u, k, gains_, cap);
      out.tau_z = bs_heading(s.nu, out.e_psi, s.r(), k, gains_);
    } else {
      const double xi_u = shaped.u_dot_d - gains_.k_u * out.e_u;
      const double xi_r = -gains_.k1 * out.e_psi - gains_.k2 * s.r();
      auto [tx, tz] = full_model_inverse(model_, s.nu, xi_u, xi_r);
      out.tau_x = tx * gains_.surge_scale;
      out.tau_z = tz * gains_.yaw_scale;
    }
    u_traj_ += shaped.u_dot_d * tick;
    return out;
  }

 private:
  VesselModel model_;
  ControllerGains gains_;
  Linearization mode_;
  double u_traj_ = 0;
};

}  // namespace usv

#endif  // USV_CONTROL_BACKSTEPPING_HPP_
