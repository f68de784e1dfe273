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

#ifndef USV_PROPULSION_THRUSTER_HPP_
#define USV_PROPULSION_THRUSTER_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "usv/core/types.hpp"
#include "usv/model/dynamics.hpp"

namespace usv {

// Normalized jet commands n / n_max, forward only.
struct MotorCommand {
  double port = 0;
  double stbd = 0;

  static MotorCommand clamped(double p, double s) {
    return {std::clamp(p, 0.0, 1.0), std::clamp(s, 0.0, 1.0)};
  }
};

enum class ThrusterVariant { kBollardLinear, kPumpAnalog };

inline std::string_view to_string(ThrusterVariant v) {
  return v == ThrusterVariant::kBollardLinear ? "bollard" : "pump";
}

inline ThrusterVariant thruster_variant_from_string(std::string_view s) {
  if (s == "bollard" || s == "bollard_linear") {
    return ThrusterVariant::kBollardLinear;
  }
  if (s == "pump" || s == "pump_analog") return ThrusterVariant::kPumpAnalog;
  throw ValidationError("unknown thruster model '" + std::string(s) +
                        "' (expected bollard or pump)");
}

// Per jet. Pump form T = a2 n^2 + a1 u n with the rho d^k factors lumped in.
struct ThrusterModel {
  ThrusterVariant variant = ThrusterVariant::kBollardLinear;
  double jet_max = 102.0;  // N
  double a1 = 0.0;         // N/(m/s), <= 0
  double a2 = 102.0;       // N

  void validate() const {
    require(jet_max > 0, "thruster.jet_max must be > 0");
    if (variant == ThrusterVariant::kPumpAnalog) {
      require(a1 <= 0, "thruster.a1 must be <= 0");
      require(a2 > 0, "thruster.a2 must be > 0");
    }
  }
};

inline double bollard_thrust(double cmd, double jet_max = 102.0) {
  return std::clamp(cmd, 0.0, 1.0) * jet_max;
}

inline double pump_analog_thrust(double cmd, double u,
                                 const ThrusterModel& m) {
  const double n = std::clamp(cmd, 0.0, 1.0);
  return std::max(0.0, m.a2 * n * n + m.a1 * u * n);
}

inline double jet_thrust(double cmd, double u, const ThrusterModel& m) {
  if (m.variant == ThrusterVariant::kBollardLinear) {
    return bollard_thrust(cmd, m.jet_max);
  }
  return pump_analog_thrust(cmd, u, m);
}

// Per jet a1 so that two jets at full command balance the drag at the
// target speed.
inline double calibrate_thrust_decay(double bollard_total, double target_speed,
                                     const DisplacementCondition& c,
                                     double cap = 3.2) {
  require(target_speed > 0, "target speed must be > 0");
  require(bollard_total > 0, "bollard thrust must be > 0");
  const double d = surge_drag(c, target_speed, cap);
  require(d <= bollard_total,
          "target speed infeasible: drag exceeds bollard thrust");
  return (d - bollard_total) / (2.0 * target_speed);
}

inline ThrusterModel calibrated_pump_model(double bollard_total,
                                           double target_speed,
                                           const DisplacementCondition& c,
                                           double cap = 3.2) {
  ThrusterModel m;
  m.variant = ThrusterVariant::kPumpAnalog;
  m.jet_max = 0.5 * bollard_total;
  m.a2 = 0.5 * bollard_total;
  m.a1 = calibrate_thrust_decay(bollard_total, target_speed, c, cap);
  return m;
}

struct Allocation {
  double port_raw, stbd_raw;  // before clamping
  double port, stbd;
};

inline Allocation allocate(double tau_x, double tau_z, double B,
                           double jet_max = 102.0) {
  require(B > 0, "hull separation must be > 0");
  Allocation a;
  a.port_raw = 0.5 * tau_x + tau_z / B;
  a.stbd_raw = 0.5 * tau_x - tau_z / B;
  a.port = std::clamp(a.port_raw, 0.0, jet_max);
  a.stbd = std::clamp(a.stbd_raw, 0.0, jet_max);
  return a;
}

inline GeneralizedForce combine(double t_port, double t_stbd, double B) {
  return GeneralizedForce(t_port + t_stbd, 0.0, (t_port - t_stbd) * 0.5 * B);
}

// Smallest command reaching thrust T at speed u.
inline double thrust_to_command(double T, double u, const ThrusterModel& m) {
  if (!(T > 0)) return 0.0;
  if (m.variant == ThrusterVariant::kBollardLinear) {
    return std::min(1.0, T / m.jet_max);
  }
  const double b = m.a1 * u;
  const double n = (-b + std::sqrt(b * b + 4.0 * m.a2 * T)) / (2.0 * m.a2);
  return std::clamp(n, 0.0, 1.0);
}

}  // namespace usv

#endif  // USV_PROPULSION_THRUSTER_HPP_
