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

#ifndef USV_SIM_RUNNER_HPP_
#define USV_SIM_RUNNER_HPP_

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "usv/control/adaptive.hpp"
#include "usv/control/backstepping.hpp"
#include "usv/core/types.hpp"
#include "usv/model/dynamics.hpp"
#include "usv/propulsion/thruster.hpp"
#include "usv/sim/integrator.hpp"
#include "usv/sim/scenario.hpp"

namespace usv {

// One row per controller tick. State is the state at t; the control columns
// are what gets held over [t, t + tick).
struct LogRecord {
  double t = 0;
  double x = 0, y = 0, psi = 0;
  double u = 0, v = 0, r = 0;
  double u_d = 0, psi_d = 0;
  double u_d_ref = 0, u_d_traj = 0;
  double e_u = 0, e_psi = 0;
  double tau_x = 0, tau_z = 0;
  double thrust_port_raw = 0, thrust_stbd_raw = 0;
  double thrust_port = 0, thrust_stbd = 0;  // after clamping
  double jet_port = 0, jet_stbd = 0;        // produced at this speed
  double cmd_port = 0, cmd_stbd = 0;
  double X_u_hat = 0, X_uu_hat = 0, a_d_hat = 0;
  double u_m = 0, e_m = 0;
  double V = 0, V_dot = 0;
  int saturated = 0;
  int adapt_paused = 0;
  double mass = 0;
  double tow_coeff = 0;
  std::string condition_before;
  std::string condition;
  std::string event;  // '+' joined kinds applied at this tick
};

struct RunLog {
  std::string scenario;
  std::string controller;
  std::string scenario_hash;  // filled by io, identifies the plant side
  double dt = 0;
  double tick = 0;
  std::vector<double> event_times;
  std::vector<LogRecord> records;
};

namespace detail {

inline DisplacementCondition after_drop(const DisplacementCondition& cur,
                                        const Event& e) {
  if (e.new_condition) return *e.new_condition;
  DisplacementCondition c = cur;
  c.label = ConditionLabel::kCustom;
  c.mass = cur.mass - e.delta_m;
  c.draft_override.reset();
  return c;
}

}  // namespace detail

inline RunLog run_scenario(const ScenarioSpec& spec) {
  spec.validate();
  const auto& geom = spec.geometry;
  const auto& opt = spec.model;
  const double B = geom.hull_separation;
  const double jet_max = spec.thruster.jet_max;

  DisplacementCondition cond = spec.condition;
  VesselModel plant(geom, cond, opt);
  const VesselModel assumed(geom, spec.controller.assumed, opt);
  const auto& gains = spec.controller.gains;

  std::optional<BacksteppingController> bs;
  std::optional<AdaptiveBacksteppingController> abs;
  SimState state = spec.initial;
  state.eta(2) = wrap_angle(state.eta(2));
  if (spec.controller.kind == ControllerKind::kBackstepping) {
    bs.emplace(assumed, gains, spec.controller.linearization);
    bs->reset(state.u());
  } else if (spec.controller.kind == ControllerKind::kAdaptive) {
    abs.emplace(assumed, gains, spec.controller.adaptive_init,
                spec.controller.anti_windup, spec.controller.freeze_secondary,
                jet_max);
    abs->reset(state.u());
  }

  RunLog log;
  log.scenario = spec.name;
  log.controller = std::string(to_string(spec.controller.kind));
  log.dt = spec.dt;
  log.tick = spec.tick;

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const long n_ticks = spec.tick_count();
  const long spt = spec.steps_per_tick();
  log.records.reserve(static_cast<size_t>(n_ticks + 1));

  double u_d = 0, psi_d = state.psi();
  MotorCommand cmd;
  double tow = 0;
  double impulse = 0;
  long impulse_end = -1;
  size_t i_sp = 0, i_cmd = 0, i_ev = 0;

  for (long k = 0; k <= n_ticks; ++k) {
    const double t = static_cast<double>(k) * spec.tick;
    LogRecord rec;
    rec.t = t;
    rec.condition_before = std::string(to_string(cond.label));

    while (i_sp < spec.setpoints.size() &&
           spec.tick_index(spec.setpoints[i_sp].time) <= k) {
      const auto& next = spec.setpoints[i_sp++];
      if (k > 0 && (next.u_d != u_d || next.psi_d != psi_d)) {
        if (!rec.event.empty()) rec.event += '+';
        rec.event += "setpoint";
      }
      u_d = next.u_d;
      psi_d = next.psi_d;
    }
    while (i_cmd < spec.commands.size() &&
           spec.tick_index(spec.commands[i_cmd].time) <= k) {
      cmd = spec.commands[i_cmd].command;
      ++i_cmd;
    }
    while (i_ev < spec.events.size() &&
           spec.tick_index(spec.events[i_ev].time) <= k) {
      const Event& e = spec.events[i_ev++];
      switch (e.kind) {
        case EventKind::kMassDrop:
          // nu carries over unchanged.
          cond = detail::after_drop(cond, e);
          plant = VesselModel(geom, cond, opt);
          break;
        case EventKind::kTowAttach:
          tow += e.tow_coeff;
          break;
        case EventKind::kImpulse:
          impulse = e.force;
          impulse_end = k + spec.tick_index(e.duration);
          break;
        case EventKind::kCommandChange:
          if (e.command) cmd = *e.command;
          if (e.u_d) u_d = *e.u_d;
          if (e.psi_d) psi_d = *e.psi_d;
          break;
      }
      if (!rec.event.empty()) rec.event += '+';
      rec.event += to_string(e.kind);
    }
    if (!rec.event.empty()) log.event_times.push_back(t);
    rec.condition = std::string(to_string(cond.label));
    rec.mass = cond.mass;
    rec.tow_coeff = tow;

    SimState meas = state;
    if (spec.noise_speed > 0) meas.nu(0) += spec.noise_speed * gauss(rng);
    if (spec.noise_heading > 0) {
      meas.eta(2) = wrap_angle(meas.eta(2) + spec.noise_heading * gauss(rng));
    }

    const Setpoint sp = make_setpoint(u_d, psi_d, gains);
    rec.u_d = sp.u_d;
    rec.psi_d = sp.psi_d;
    if (bs || abs) {
      ControlOutput c;
      if (bs) {
        c = bs->step(meas, sp, spec.tick);
      } else {
        const AdaptiveState before = abs->state();
        const auto a = abs->step(meas, sp, spec.tick);
        c = a.control;
        rec.X_u_hat = before.X_u_hat;
        rec.X_uu_hat = before.X_uu_hat;
        rec.a_d_hat = before.a_d_hat;
        rec.u_m = a.u_m;
        rec.e_m = a.e_m;
        rec.saturated = a.saturated;
        rec.adapt_paused = a.adapt_paused;
        const auto k_true = plant.coefficients(Vec3::Zero());
        const double s = gains.surge_scale;
        PlantTruth truth{(k_true.m - k_true.X_udot) / s, cond.X_u / s,
                         (cond.X_uu + tow) / s};
        const auto lv = lyapunov_diagnostics(
            before, truth, state.u() - before.u_m, truth.h, before.a_m,
            before.b_m, abs->effective_gamma());
        rec.V = lv.V;
        rec.V_dot = lv.V_dot;
      }
      rec.u_d_ref = c.u_d_ref;
      rec.u_d_traj = c.u_d_traj;
      rec.e_u = c.e_u;
      rec.e_psi = c.e_psi;
      rec.tau_x = c.tau_x;
      rec.tau_z = c.tau_z;
      const auto al = allocate(c.tau_x, c.tau_z, B, jet_max);
      rec.thrust_port_raw = al.port_raw;
      rec.thrust_stbd_raw = al.stbd_raw;
      rec.thrust_port = al.port;
      rec.thrust_stbd = al.stbd;
      if (bs) {
        auto outside = [jet_max](double x) { return x < 0 || x > jet_max; };
        rec.saturated = outside(al.port_raw) || outside(al.stbd_raw);
      }
      cmd = MotorCommand{thrust_to_command(al.port, meas.u(), spec.thruster),
                         thrust_to_command(al.stbd, meas.u(), spec.thruster)};
    } else {
      rec.e_psi = heading_error(state.psi(), psi_d);
      rec.e_u = state.u() - u_d;
    }
    rec.cmd_port = cmd.port;
    rec.cmd_stbd = cmd.stbd;
    rec.jet_port = jet_thrust(cmd.port, state.u(), spec.thruster);
    rec.jet_stbd = jet_thrust(cmd.stbd, state.u(), spec.thruster);
    if (!bs && !abs) {
      const auto tau = combine(rec.jet_port, rec.jet_stbd, B);
      rec.tau_x = tau(0);
      rec.tau_z = tau(2);
    }
    rec.x = state.x();
    rec.y = state.y();
    rec.psi = state.psi();
    rec.u = state.u();
    rec.v = state.v();
    rec.r = state.r();
    log.records.push_back(std::move(rec));
    if (k == n_ticks) break;

    const double push = k < impulse_end ? impulse : 0.0;
    const auto& thr = spec.thruster;
    const MotorCommand held = cmd;
    auto force = [&](const SimState& x) {
      GeneralizedForce f = combine(jet_thrust(held.port, x.u(), thr),
                                   jet_thrust(held.stbd, x.u(), thr), B);
      f(0) += push - tow * signed_square(x.u());
      return f;
    };
    for (long j = 0; j < spt; ++j) {
      state = integrate_step(state, force, plant, spec.dt);
    }
  }
  return log;
}

struct DoubleColumn {
  const char* name;
  double LogRecord::*field;
};
struct IntColumn {
  const char* name;
  int LogRecord::*field;
};
struct TextColumn {
  const char* name;
  std::string LogRecord::*field;
};

// CSV column order.
inline const std::vector<DoubleColumn>& double_columns() {
  static const std::vector<DoubleColumn> cols = {
      {"t", &LogRecord::t},
      {"x", &LogRecord::x},
      {"y", &LogRecord::y},
      {"psi", &LogRecord::psi},
      {"u", &LogRecord::u},
      {"v", &LogRecord::v},
      {"r", &LogRecord::r},
      {"u_d", &LogRecord::u_d},
      {"psi_d", &LogRecord::psi_d},
      {"u_d_ref", &LogRecord::u_d_ref},
      {"u_d_traj", &LogRecord::u_d_traj},
      {"e_u", &LogRecord::e_u},
      {"e_psi", &LogRecord::e_psi},
      {"tau_x", &LogRecord::tau_x},
      {"tau_z", &LogRecord::tau_z},
      {"thrust_port_raw", &LogRecord::thrust_port_raw},
      {"thrust_stbd_raw", &LogRecord::thrust_stbd_raw},
      {"thrust_port", &LogRecord::thrust_port},
      {"thrust_stbd", &LogRecord::thrust_stbd},
      {"jet_port", &LogRecord::jet_port},
      {"jet_stbd", &LogRecord::jet_stbd},
      {"cmd_port", &LogRecord::cmd_port},
      {"cmd_stbd", &LogRecord::cmd_stbd},
      {"X_u_hat", &LogRecord::X_u_hat},
      {"X_uu_hat", &LogRecord::X_uu_hat},
      {"a_d_hat", &LogRecord::a_d_hat},
      {"u_m", &LogRecord::u_m},
      {"e_m", &LogRecord::e_m},
      {"V", &LogRecord::V},
      {"V_dot", &LogRecord::V_dot},
      {"mass", &LogRecord::mass},
      {"tow_coeff", &LogRecord::tow_coeff},
  };
  return cols;
}

inline const std::vector<IntColumn>& int_columns() {
  static const std::vector<IntColumn> cols = {
      {"saturated", &LogRecord::saturated},
      {"adapt_paused", &LogRecord::adapt_paused},
  };
  return cols;
}

inline const std::vector<TextColumn>& text_columns() {
  static const std::vector<TextColumn> cols = {
      {"condition_before", &LogRecord::condition_before},
      {"condition", &LogRecord::condition},
      {"event", &LogRecord::event},
  };
  return cols;
}

// Numeric channel by column name.
inline std::vector<double> channel(const RunLog& log, std::string_view name) {
  std::vector<double> out;
  out.reserve(log.records.size());
  for (const auto& c : double_columns()) {
    if (name == c.name) {
      for (const auto& r : log.records) out.push_back(r.*(c.field));
      return out;
    }
  }
  for (const auto& c : int_columns()) {
    if (name == c.name) {
      for (const auto& r : log.records) out.push_back(r.*(c.field));
      return out;
    }
  }
  throw ValidationError("unknown log channel '" + std::string(name) + "'");
}

}  // namespace usv

#endif  // USV_SIM_RUNNER_HPP_
