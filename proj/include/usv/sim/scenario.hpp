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

#ifndef USV_SIM_SCENARIO_HPP_
#define USV_SIM_SCENARIO_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "usv/control/adaptive.hpp"
#include "usv/control/backstepping.hpp"
#include "usv/core/types.hpp"
#include "usv/model/geometry.hpp"
#include "usv/model/options.hpp"
#include "usv/propulsion/thruster.hpp"

namespace usv {

enum class ControllerKind { kOpenLoop, kBackstepping, kAdaptive };

inline std::string_view to_string(ControllerKind k) {
  switch (k) {
    case ControllerKind::kOpenLoop: return "open";
    case ControllerKind::kBackstepping: return "bs";
    case ControllerKind::kAdaptive: return "abs";
  }
  return "open";
}

inline ControllerKind controller_kind_from_string(std::string_view s) {
  if (s == "open" || s == "open_loop") return ControllerKind::kOpenLoop;
  if (s == "bs") return ControllerKind::kBackstepping;
  if (s == "abs") return ControllerKind::kAdaptive;
  throw ValidationError("unknown controller '" + std::string(s) +
                        "' (expected open, bs or abs)");
}

struct ControllerConfig {
  ControllerKind kind = ControllerKind::kOpenLoop;
  ControllerGains gains;
  Linearization linearization = Linearization::kReduced;
  // Loading the controller believes in. Tuned condition, not the plant's.
  DisplacementCondition assumed = lightship_condition();
  AdaptiveInit adaptive_init = AdaptiveInit::kMatched;
  bool anti_windup = true;
  bool freeze_secondary = false;
};

struct SetpointStep {
  double time = 0;
  double u_d = 0;
  double psi_d = 0;  // rad
};

struct CommandStep {
  double time = 0;
  MotorCommand command;
};

enum class EventKind { kMassDrop, kTowAttach, kImpulse, kCommandChange };

inline std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::kMassDrop: return "mass_drop";
    case EventKind::kTowAttach: return "tow_attach";
    case EventKind::kImpulse: return "impulse";
    case EventKind::kCommandChange: return "command_change";
  }
  return "";
}

inline EventKind event_kind_from_string(std::string_view s) {
  if (s == "mass_drop") return EventKind::kMassDrop;
  if (s == "tow_attach") return EventKind::kTowAttach;
  if (s == "impulse") return EventKind::kImpulse;
  if (s == "command_change") return EventKind::kCommandChange;
  throw ValidationError("unknown event kind '" + std::string(s) + "'");
}

struct Event {
  double time = 0;
  EventKind kind = EventKind::kMassDrop;
  // kMassDrop
  double delta_m = 0;
  std::optional<DisplacementCondition> new_condition;
  // kTowAttach, N/(m/s)^2
  double tow_coeff = 0;
  // kImpulse, forward surge force
  double force = 0;
  double duration = 0;
  // kCommandChange
  std::optional<MotorCommand> command;
  std::optional<double> u_d;
  std::optional<double> psi_d;
};

struct ScenarioSpec {
  std::string name = "custom";
  VesselGeometry geometry;
  DisplacementCondition condition = lightship_condition();
  ModelOptions model;
  ThrusterModel thruster;
  ControllerConfig controller;
  SimState initial;
  std::vector<SetpointStep> setpoints;
  std::vector<CommandStep> commands;
  std::vector<Event> events;
  double duration = 60.0;
  double dt = 0.01;
  double tick = 0.01;
  unsigned long long seed = 0;
  double noise_speed = 0;    // m/s, Gaussian on measured u
  double noise_heading = 0;  // rad, Gaussian on measured psi

  long steps_per_tick() const { return std::lround(tick / dt); }
  long tick_count() const { return std::lround(duration / tick); }
  long tick_index(double t) const { return std::lround(t / tick); }

  // All problems at once, so a config can be fixed in one pass.
  std::vector<std::string> validation_errors() const {
    std::vector<std::string> errs;
    auto check = [&errs](auto&& fn) {
      try {
        fn();
      } catch (const ValidationError& e) {
        errs.emplace_back(e.what());
      } catch (const NumericalError& e) {
        errs.emplace_back(e.what());
      }
    };
    check([&] { geometry.validate(); });
    check([&] { condition.validate(); });
    check([&] { (void)draft_for(geometry, condition); });
    check([&] { model.validate(); });
    check([&] { thruster.validate(); });
    check([&] { controller.gains.validate(); });
    check([&] { controller.assumed.validate(); });
    auto on_grid = [this](double t) {
      return std::abs(t / tick - std::round(t / tick)) < 1e-6;
    };
    if (!(dt > 0)) errs.emplace_back("dt must be > 0");
    if (!(tick > 0)) errs.emplace_back("tick must be > 0");
    if (dt > 0 && tick > 0) {
      const double ratio = tick / dt;
      if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio || ratio < 0.5) {
        errs.emplace_back("tick must be an integer multiple of dt");
      }
    }
    if (!(duration > 0)) errs.emplace_back("duration must be > 0");
    if (tick > 0 && duration > 0 && !on_grid(duration)) {
      errs.emplace_back("duration must be a multiple of tick");
    }
    if (!initial.eta.allFinite() || !initial.nu.allFinite()) {
      errs.emplace_back("initial state must be finite");
    }
    if (noise_speed < 0 || noise_heading < 0) {
      errs.emplace_back("noise sigmas must be >= 0");
    }
    double prev = -1.0;
    for (size_t i = 0; i < setpoints.size(); ++i) {
      const auto& s = setpoints[i];
      if (s.time < prev) errs.emplace_back("setpoints must be sorted by time");
      prev = s.time;
      if (s.u_d < 0) errs.emplace_back("setpoint u_d must be >= 0");
    }
    prev = -1.0;
    for (const auto& c : commands) {
      if (c.time < prev) errs.emplace_back("commands must be sorted by time");
      prev = c.time;
    }
    if (controller.kind != ControllerKind::kOpenLoop && setpoints.empty()) {
      errs.emplace_back("closed loop scenario needs at least one setpoint");
    }
    prev = -1.0;
    double mass = condition.mass;
    for (size_t i = 0; i < events.size(); ++i) {
      const auto& e = events[i];
      const std::string tag = "event " + std::to_string(i) + " (" +
                              std::string(to_string(e.kind)) + ")";
      if (e.time < 0 || e.time > duration) {
        errs.emplace_back(tag + ": time outside [0, duration]");
      }
      if (e.time < prev) errs.emplace_back(tag + ": events must be sorted");
      prev = e.time;
      if (tick > 0 && !on_grid(e.time)) {
        errs.emplace_back(tag + ": time must fall on a controller tick");
      }
      switch (e.kind) {
        case EventKind::kMassDrop: {
          if (e.delta_m < 0) errs.emplace_back(tag + ": delta_m must be >= 0");
          const double next =
              e.new_condition ? e.new_condition->mass : mass - e.delta_m;
          if (!(next > 0)) errs.emplace_back(tag + ": mass must stay > 0");
          if (next > mass) errs.emplace_back(tag + ": mass drop adds mass");
          if (e.new_condition &&
              std::abs(e.new_condition->mass - (mass - e.delta_m)) > 1e-9) {
            errs.emplace_back(tag +
                              ": new condition mass differs from mass - "
                              "delta_m");
          }
          mass = next;
          break;
        }
        case EventKind::kTowAttach:
          if (e.tow_coeff < 0) errs.emplace_back(tag + ": tow_coeff < 0");
          break;
        case EventKind::kImpulse:
          if (e.duration < 0) errs.emplace_back(tag + ": duration < 0");
          if (tick > 0 && !on_grid(e.duration)) {
            errs.emplace_back(tag + ": duration must be a multiple of tick");
          }
          break;
        case EventKind::kCommandChange:
          if (!e.command && !e.u_d && !e.psi_d) {
            errs.emplace_back(tag + ": nothing to change");
          }
          if (e.u_d && *e.u_d < 0) errs.emplace_back(tag + ": u_d < 0");
          break;
      }
    }
    return errs;
  }

  void validate() const {
    const auto errs = validation_errors();
    if (errs.empty()) return;
    std::string msg = "invalid scenario:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw ValidationError(msg);
  }
};

// Builders. Event timing and loadings follow the field protocols.

inline ThrusterModel pump_model_for(const DisplacementCondition& c,
                                    double bollard_total = 204.0,
                                    double cap = 3.2) {
  if (!c.top_speed) {
    throw ValidationError(
        "pump thruster needs a calibration speed for condition '" +
        std::string(to_string(c.label)) + "'");
  }
  return calibrated_pump_model(bollard_total, *c.top_speed, c, cap);
}

inline ScenarioSpec scenario_acceleration(double throttle,
                                          const DisplacementCondition& c,
                                          double duration = 60.0) {
  ScenarioSpec s;
  s.name = "acceleration";
  s.condition = c;
  s.thruster = pump_model_for(c);
  s.duration = duration;
  s.commands.push_back({0.0, MotorCommand::clamped(throttle, throttle)});
  return s;
}

inline ScenarioSpec scenario_zigzag(const DisplacementCondition& c,
                                    double period = 7.0,
                                    double duration = 70.0) {
  require(period > 0, "zigzag period must be > 0");
  ScenarioSpec s;
  s.name = "zigzag";
  s.condition = c;
  s.duration = duration;
  bool port = true;
  for (double t = 0.0; t < duration; t += period) {
    s.commands.push_back(
        {t, port ? MotorCommand{1.0, 0.0} : MotorCommand{0.0, 1.0}});
    port = !port;
  }
  return s;
}

inline ScenarioSpec scenario_setpoint(double u_d = 1.5, double psi0 = 0.0,
                                      double jump_time = 15.0,
                                      double jump_deg = 90.0,
                                      double duration = 60.0) {
  require(jump_time >= 0 && jump_time <= duration,
          "jump time must lie within the duration");
  ScenarioSpec s;
  s.name = "setpoint";
  s.condition = lightship_condition();
  s.duration = duration;
  s.initial.eta(2) = wrap_angle(psi0);
  s.controller.kind = ControllerKind::kBackstepping;
  s.setpoints.push_back({0.0, u_d, wrap_angle(psi0)});
  s.setpoints.push_back({jump_time, u_d, wrap_angle(psi0 + deg2rad(jump_deg))});
  return s;
}

struct VariableScenarioOptions {
  double u_d = 1.0;
  double psi_d = deg2rad(150.0);
  std::optional<double> event_time;  // default 78 / 42 / 87 s per protocol
  double post_event = 200.0;  // simulated time after the event
  double delta_m = 26.0;
  double tow_coeff = 84.0;
  bool impulse = false;
  double impulse_force = 100.0;
  double impulse_duration = 0.5;
  ControllerKind controller = ControllerKind::kAdaptive;
  DisplacementCondition assumed = lightship_condition();
};

namespace detail {

inline ScenarioSpec variable_base(VariableScenarioOptions& o,
                                  const DisplacementCondition& start,
                                  const char* name, double default_time) {
  if (!o.event_time) o.event_time = default_time;
  ScenarioSpec s;
  s.name = name;
  s.condition = start;
  s.duration = *o.event_time + o.post_event;
  s.initial.eta(2) = wrap_angle(o.psi_d);
  s.controller.kind = o.controller;
  s.controller.assumed = o.assumed;
  s.setpoints.push_back({0.0, o.u_d, wrap_angle(o.psi_d)});
  return s;
}

inline Event mass_drop(const VariableScenarioOptions& o, double from_mass) {
  Event e;
  e.time = *o.event_time;
  e.kind = EventKind::kMassDrop;
  e.delta_m = o.delta_m;
  const double next = from_mass - o.delta_m;
  if (std::abs(next - lightship_condition().mass) < 1e-9) {
    e.new_condition = lightship_condition();
  }
  return e;
}

inline void add_impulse(ScenarioSpec& s, const VariableScenarioOptions& o) {
  if (!o.impulse) return;
  Event e;
  e.time = *o.event_time;
  e.kind = EventKind::kImpulse;
  e.force = o.impulse_force;
  e.duration = o.impulse_duration;
  s.events.push_back(e);
}

}  // namespace detail

inline ScenarioSpec scenario_variable_mass(VariableScenarioOptions o = {}) {
  auto s = detail::variable_base(o, full_condition(), "variable-mass", 78.0);
  s.events.push_back(detail::mass_drop(o, s.condition.mass));
  detail::add_impulse(s, o);
  return s;
}

inline ScenarioSpec scenario_variable_drag(VariableScenarioOptions o = {}) {
  auto s = detail::variable_base(o, lightship_condition(), "variable-drag", 42.0);
  Event e;
  e.time = *o.event_time;
  e.kind = EventKind::kTowAttach;
  e.tow_coeff = o.tow_coeff;
  s.events.push_back(e);
  return s;
}

inline ScenarioSpec scenario_variable_mass_drag(
    VariableScenarioOptions o = {}) {
  auto s =
      detail::variable_base(o, full_condition(), "variable-mass-drag", 87.0);
  s.events.push_back(detail::mass_drop(o, s.condition.mass));
  Event e;
  e.time = *o.event_time;
  e.kind = EventKind::kTowAttach;
  e.tow_coeff = o.tow_coeff;
  s.events.push_back(e);
  detail::add_impulse(s, o);
  return s;
}

inline const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {
      "acceleration", "zigzag", "setpoint",
      "variable-mass", "variable-drag", "variable-mass-drag"};
  return names;
}

inline ScenarioSpec builtin_scenario(std::string_view name) {
  if (name == "acceleration") {
    return scenario_acceleration(1.0, lightship_condition());
  }
  if (name == "zigzag") return scenario_zigzag(lightship_condition());
  if (name == "setpoint") return scenario_setpoint();
  if (name == "variable-mass") return scenario_variable_mass();
  if (name == "variable-drag") return scenario_variable_drag();
  if (name == "variable-mass-drag") return scenario_variable_mass_drag();
  std::string known;
  for (const auto& n : builtin_scenario_names()) known += " " + n;
  throw ValidationError("unknown builtin scenario '" + std::string(name) +
                        "' (known:" + known + ")");
}

}  // namespace usv

#endif  // USV_SIM_SCENARIO_HPP_
