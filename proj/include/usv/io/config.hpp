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

#ifndef USV_IO_CONFIG_HPP_
#define USV_IO_CONFIG_HPP_

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "usv/core/types.hpp"
#include "usv/io/format.hpp"
#include "usv/sim/scenario.hpp"

namespace usv {

// Minimal INI: [section] headers, key = value, '#' or ';' comments.
// Sections may repeat ([event] once per event).
struct IniEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct IniSection {
  std::string name;
  int line = 0;
  std::vector<IniEntry> entries;
};

struct IniDocument {
  std::string source = "<config>";
  std::vector<IniSection> sections;

  const IniSection* find(std::string_view name) const {
    for (const auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }
};

inline IniDocument parse_ini(std::string_view text,
                             std::string source = "<config>") {
  IniDocument doc;
  doc.source = std::move(source);
  std::vector<std::string> errs;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::string where = doc.source + ":" + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') {
        errs.push_back(where + "unterminated section header");
      } else {
        doc.sections.push_back(
            {std::string(trim(line.substr(1, line.size() - 2))), lineno, {}});
      }
    } else {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        errs.push_back(where + "expected key = value");
      } else if (doc.sections.empty()) {
        errs.push_back(where + "key outside of any [section]");
      } else {
        doc.sections.back().entries.push_back(
            {std::string(trim(line.substr(0, eq))),
             std::string(trim(line.substr(eq + 1))), lineno});
      }
    }
    if (nl == text.size()) break;
  }
  if (!errs.empty()) {
    std::string msg = "config parse errors:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw ValidationError(msg);
  }
  return doc;
}

inline IniDocument load_ini(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ini(ss.str(), path);
}

namespace detail {

inline bool parse_bool(std::string_view v, std::string_view what) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ValidationError(std::string(what) + ": expected true or false, got '" +
                        std::string(v) + "'");
}

inline std::vector<double> parse_list(std::string_view v, size_t n,
                                      std::string_view what) {
  std::vector<double> out;
  size_t p = 0;
  while (true) {
    const size_t c = v.find(',', p);
    out.push_back(parse_double(v.substr(p, c == std::string_view::npos
                                               ? std::string_view::npos
                                               : c - p),
                               what));
    if (c == std::string_view::npos) break;
    p = c + 1;
  }
  if (out.size() != n) {
    throw ValidationError(std::string(what) + ": expected " +
                          std::to_string(n) + " comma separated values");
  }
  return out;
}

// Applies one section, one key at a time, collecting every error.
class SectionReader {
 public:
  SectionReader(const IniDocument& doc, const IniSection& sec,
                std::vector<std::string>& errs)
      : doc_(doc), sec_(sec), errs_(errs) {}

  using Handler = std::function<void(const std::string&)>;

  SectionReader& on(const std::string& key, Handler h) {
    handlers_.emplace_back(key, std::move(h));
    return *this;
  }

  void run() {
    for (const auto& [key, h] : handlers_) {
      for (const auto& e : sec_.entries) {
        if (e.key != key) continue;
        try {
          h(e.value);
        } catch (const std::exception& ex) {
          errs_.push_back(where(e) + ex.what());
        }
      }
    }
    for (const auto& e : sec_.entries) {
      bool known = false;
      for (const auto& hk : handlers_) known = known || hk.first == e.key;
      if (!known) {
        errs_.push_back(where(e) + "unknown key '" + e.key + "' in [" +
                        sec_.name + "]");
      }
    }
  }

 private:
  std::string where(const IniEntry& e) const {
    return doc_.source + ":" + std::to_string(e.line) + ": ";
  }
  const IniDocument& doc_;
  const IniSection& sec_;
  std::vector<std::string>& errs_;
  std::vector<std::pair<std::string, Handler>> handlers_;
};

inline std::function<void(const std::string&)> num(double& dst,
                                                   std::string what) {
  return [&dst, what](const std::string& v) { dst = parse_double(v, what); };
}

inline std::function<void(const std::string&)> secs(double& dst,
                                                    std::string what) {
  return [&dst, what](const std::string& v) { dst = parse_seconds(v, what); };
}

inline std::function<void(const std::string&)> flag(bool& dst,
                                                    std::string what) {
  return [&dst, what](const std::string& v) { dst = parse_bool(v, what); };
}

inline std::optional<double> opt_num(const std::string& v,
                                     std::string_view what) {
  if (v == "auto" || v == "none" || v.empty()) return std::nullopt;
  return parse_double(v, what);
}

}  // namespace detail

// Overlays a config document on `spec`. Throws one ValidationError listing
// every problem.
inline void apply_config(ScenarioSpec& spec, const IniDocument& doc) {
  using namespace detail;
  std::vector<std::string> errs;
  static const std::vector<std::string> known = {
      "scenario", "geometry", "condition", "model",    "thruster",
      "controller", "initial", "setpoints", "commands", "event"};
  for (const auto& s : doc.sections) {
    bool ok = false;
    for (const auto& k : known) ok = ok || s.name == k;
    if (!ok) {
      errs.push_back(doc.source + ":" + std::to_string(s.line) +
                     ": unknown section [" + s.name + "]");
    }
  }

  std::optional<double> calib_speed;
  std::optional<double> bollard_total;
  bool thruster_coeffs_given = false;
  bool events_replaced = false, setpoints_replaced = false,
       commands_replaced = false;

  for (const auto& sec : doc.sections) {
    SectionReader rd(doc, sec, errs);
    if (sec.name == "scenario") {
      rd.on("builtin", [](const std::string&) {})  // consumed by the caller
          .on("name", [&](const std::string& v) { spec.name = v; })
          .on("duration", secs(spec.duration, "scenario.duration"))
          .on("dt", secs(spec.dt, "scenario.dt"))
          .on("tick", secs(spec.tick, "scenario.tick"))
          .on("seed",
              [&](const std::string& v) {
                const double s = parse_double(v, "scenario.seed");
                require(s >= 0 && s == std::floor(s),
                        "scenario.seed must be a non-negative integer");
                spec.seed = static_cast<unsigned long long>(s);
              })
          .on("noise_speed", num(spec.noise_speed, "scenario.noise_speed"))
          .on("noise_heading_deg", [&](const std::string& v) {
            spec.noise_heading =
                deg2rad(parse_double(v, "scenario.noise_heading_deg"));
          });
    } else if (sec.name == "geometry") {
      auto& g = spec.geometry;
      rd.on("length_overall", num(g.length_overall, "geometry.length_overall"))
          .on("waterline_length",
              num(g.waterline_length, "geometry.waterline_length"))
          .on("hull_separation",
              num(g.hull_separation, "geometry.hull_separation"))
          .on("beam_overall", num(g.beam_overall, "geometry.beam_overall"))
          .on("hull_beam", num(g.hull_beam, "geometry.hull_beam"))
          .on("draft", num(g.draft, "geometry.draft"))
          .on("mass", num(g.mass, "geometry.mass"))
          .on("waterplane_area",
              num(g.waterplane_area, "geometry.waterplane_area"))
          .on("lcg", num(g.lcg, "geometry.lcg"))
          .on("yaw_inertia",
              [&](const std::string& v) {
                g.yaw_inertia = opt_num(v, "geometry.yaw_inertia");
              })
          .on("water_density", num(g.water_density, "geometry.water_density"));
    } else if (sec.name == "condition") {
      auto& c = spec.condition;
      rd.on("label",
            [&](const std::string& v) {
              const auto l = condition_label_from_string(v);
              if (l != ConditionLabel::kCustom) c = preset_condition(l);
              c.label = l;
            })
          .on("mass", num(c.mass, "condition.mass"))
          .on("X_u", num(c.X_u, "condition.X_u"))
          .on("X_uu", num(c.X_uu, "condition.X_uu"))
          .on("draft",
              [&](const std::string& v) {
                c.draft_override = opt_num(v, "condition.draft");
              })
          .on("top_speed", [&](const std::string& v) {
            c.top_speed = opt_num(v, "condition.top_speed");
          });
    } else if (sec.name == "model") {
      auto& m = spec.model;
      rd.on("surge_added_mass_factor",
            num(m.surge_added_mass_factor, "model.surge_added_mass_factor"))
          .on("sway_reference_speed",
              num(m.sway_reference_speed, "model.sway_reference_speed"))
          .on("cylinder_drag_coefficient",
              num(m.cylinder_drag_coefficient,
                  "model.cylinder_drag_coefficient"))
          .on("symmetric_added_mass",
              flag(m.symmetric_added_mass, "model.symmetric_added_mass"))
          .on("drag_cap_speed", num(m.drag_cap_speed, "model.drag_cap_speed"))
          .on("hull_velocity_sign",
              [&](const std::string& v) {
                const double s = parse_double(v, "model.hull_velocity_sign");
                require(s == 1 || s == -1,
                        "model.hull_velocity_sign must be 1 or -1");
                m.hull_velocity_sign = static_cast<int>(s);
              })
          .on("switching_added_mass",
              flag(m.switching_added_mass, "model.switching_added_mass"))
          .on("decel_added_mass_ratio",
              num(m.decel_added_mass_ratio, "model.decel_added_mass_ratio"));
    } else if (sec.name == "thruster") {
      auto& t = spec.thruster;
      rd.on("model",
            [&](const std::string& v) {
              t.variant = thruster_variant_from_string(v);
            })
          .on("jet_max", num(t.jet_max, "thruster.jet_max"))
          .on("a1",
              [&](const std::string& v) {
                t.a1 = parse_double(v, "thruster.a1");
                thruster_coeffs_given = true;
              })
          .on("a2",
              [&](const std::string& v) {
                t.a2 = parse_double(v, "thruster.a2");
                thruster_coeffs_given = true;
              })
          .on("bollard_total",
              [&](const std::string& v) {
                bollard_total = parse_double(v, "thruster.bollard_total");
              })
          .on("calibration_speed", [&](const std::string& v) {
            calib_speed = parse_double(v, "thruster.calibration_speed");
          });
    } else if (sec.name == "controller") {
      auto& c = spec.controller;
      auto& g = c.gains;
      rd.on("kind",
            [&](const std::string& v) {
              c.kind = controller_kind_from_string(v);
            })
          .on("k_u", num(g.k_u, "controller.k_u"))
          .on("k1", num(g.k1, "controller.k1"))
          .on("k2", num(g.k2, "controller.k2"))
          .on("k_a_max", num(g.k_a_max, "controller.k_a_max"))
          .on("u_dot_a_max", num(g.u_dot_a_max, "controller.u_dot_a_max"))
          .on("gamma", num(g.gamma, "controller.gamma"))
          .on("surge_scale", num(g.surge_scale, "controller.surge_scale"))
          .on("yaw_scale", num(g.yaw_scale, "controller.yaw_scale"))
          .on("yaw_speed_ratio",
              num(g.yaw_speed_ratio, "controller.yaw_speed_ratio"))
          .on("heading_speed_decay",
              num(g.heading_speed_decay, "controller.heading_speed_decay"))
          .on("linearization",
              [&](const std::string& v) {
                c.linearization = linearization_from_string(v);
              })
          .on("assumed",
              [&](const std::string& v) {
                const auto l = condition_label_from_string(v);
                if (l != ConditionLabel::kCustom) c.assumed = preset_condition(l);
                c.assumed.label = l;
              })
          .on("assumed_mass", num(c.assumed.mass, "controller.assumed_mass"))
          .on("assumed_X_u", num(c.assumed.X_u, "controller.assumed_X_u"))
          .on("assumed_X_uu", num(c.assumed.X_uu, "controller.assumed_X_uu"))
          .on("assumed_draft",
              [&](const std::string& v) {
                c.assumed.draft_override = opt_num(v, "controller.assumed_draft");
              })
          .on("abs_init",
              [&](const std::string& v) {
                c.adaptive_init = adaptive_init_from_string(v);
              })
          .on("anti_windup", flag(c.anti_windup, "controller.anti_windup"))
          .on("freeze_secondary",
              flag(c.freeze_secondary, "controller.freeze_secondary"));
    } else if (sec.name == "initial") {
      auto& s = spec.initial;
      rd.on("x", num(s.eta(0), "initial.x"))
          .on("y", num(s.eta(1), "initial.y"))
          .on("psi_deg",
              [&](const std::string& v) {
                s.eta(2) = deg2rad(parse_double(v, "initial.psi_deg"));
              })
          .on("u", num(s.nu(0), "initial.u"))
          .on("v", num(s.nu(1), "initial.v"))
          .on("r_deg_s", [&](const std::string& v) {
            s.nu(2) = deg2rad(parse_double(v, "initial.r_deg_s"));
          });
    } else if (sec.name == "setpoints" || sec.name == "commands") {
      const bool sp = sec.name == "setpoints";
      if (sp && !setpoints_replaced) {
        spec.setpoints.clear();
        setpoints_replaced = true;
      }
      if (!sp && !commands_replaced) {
        spec.commands.clear();
        commands_replaced = true;
      }
      for (const auto& e : sec.entries) {
        try {
          const double t = parse_seconds(e.key, sec.name + " time");
          const auto vals = parse_list(e.value, 2, sec.name + " entry");
          if (sp) {
            spec.setpoints.push_back({t, vals[0], deg2rad(vals[1])});
          } else {
            spec.commands.push_back(
                {t, MotorCommand::clamped(vals[0], vals[1])});
          }
        } catch (const std::exception& ex) {
          errs.push_back(doc.source + ":" + std::to_string(e.line) + ": " +
                         ex.what());
        }
      }
      continue;  // keys are times, not names
    } else if (sec.name == "event") {
      if (!events_replaced) {
        spec.events.clear();
        events_replaced = true;
      }
      Event ev;
      bool has_kind = false, has_time = false;
      MotorCommand mc;
      bool has_port = false, has_stbd = false;
      rd.on("kind",
            [&](const std::string& v) {
              ev.kind = event_kind_from_string(v);
              has_kind = true;
            })
          .on("time",
              [&](const std::string& v) {
                ev.time = parse_seconds(v, "event.time");
                has_time = true;
              })
          .on("delta_m", num(ev.delta_m, "event.delta_m"))
          .on("new_condition",
              [&](const std::string& v) {
                const auto l = condition_label_from_string(v);
                require(l != ConditionLabel::kCustom,
                        "event.new_condition must name a preset");
                ev.new_condition = preset_condition(l);
              })
          .on("tow_coeff", num(ev.tow_coeff, "event.tow_coeff"))
          .on("force", num(ev.force, "event.force"))
          .on("duration", secs(ev.duration, "event.duration"))
          .on("port",
              [&](const std::string& v) {
                mc.port = parse_double(v, "event.port");
                has_port = true;
              })
          .on("stbd",
              [&](const std::string& v) {
                mc.stbd = parse_double(v, "event.stbd");
                has_stbd = true;
              })
          .on("u_d",
              [&](const std::string& v) {
                ev.u_d = parse_double(v, "event.u_d");
              })
          .on("psi_deg", [&](const std::string& v) {
            ev.psi_d = deg2rad(parse_double(v, "event.psi_deg"));
          });
      rd.run();
      const std::string where =
          doc.source + ":" + std::to_string(sec.line) + ": ";
      if (!has_kind) errs.push_back(where + "[event] needs a kind");
      if (!has_time) errs.push_back(where + "[event] needs a time");
      if (has_port != has_stbd) {
        errs.push_back(where + "[event] command needs both port and stbd");
      } else if (has_port) {
        ev.command = MotorCommand::clamped(mc.port, mc.stbd);
      }
      spec.events.push_back(ev);
      continue;
    }
    rd.run();
  }

  // Recalibrate only when this document touched the thruster or loading;
  // coefficients set by an earlier overlay are otherwise kept.
  const bool touches = doc.find("thruster") || doc.find("condition");
  if (spec.thruster.variant == ThrusterVariant::kPumpAnalog &&
      !thruster_coeffs_given && touches) {
    try {
      const double total = bollard_total.value_or(2.0 * spec.thruster.jet_max);
      auto c = spec.condition;
      if (calib_speed) c.top_speed = calib_speed;
      const double jm = spec.thruster.jet_max;
      spec.thruster = pump_model_for(c, total, spec.model.drag_cap_speed);
      spec.thruster.jet_max = jm;
    } catch (const std::exception& ex) {
      errs.push_back(doc.source + ": [thruster] " + ex.what());
    }
  }

  if (!errs.empty()) {
    // Report value problems in the same pass as the syntax ones.
    try {
      spec.validate();
    } catch (const std::exception& ex) {
      errs.push_back(doc.source + ": " + ex.what());
    }
    std::string msg = "config errors:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw ValidationError(msg);
  }
}

inline std::optional<std::string> builtin_name(const IniDocument& doc) {
  if (const auto* s = doc.find("scenario")) {
    for (const auto& e : s->entries) {
      if (e.key == "builtin") return e.value;
    }
  }
  return std::nullopt;
}

// Full, resolved text of a spec. Same spec, same bytes.
inline std::string to_config_text(const ScenarioSpec& s,
                                  bool include_controller = true) {
  std::ostringstream o;
  auto kv = [&o](const char* k, const std::string& v) {
    o << k << " = " << v << '\n';
  };
  auto d = [](double x) { return format_double(x); };
  auto opt = [&d](const std::optional<double>& x) {
    return x ? d(*x) : std::string("auto");
  };
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };

  o << "[scenario]\n";
  kv("name", s.name);
  kv("duration", format_duration(s.duration));
  kv("dt", d(s.dt));
  kv("tick", d(s.tick));
  kv("seed", std::to_string(s.seed));
  kv("noise_speed", d(s.noise_speed));
  kv("noise_heading_deg", d(rad2deg(s.noise_heading)));

  const auto& g = s.geometry;
  o << "\n[geometry]\n";
  kv("length_overall", d(g.length_overall));
  kv("waterline_length", d(g.waterline_length));
  kv("hull_separation", d(g.hull_separation));
  kv("beam_overall", d(g.beam_overall));
  kv("hull_beam", d(g.hull_beam));
  kv("draft", d(g.draft));
  kv("mass", d(g.mass));
  kv("waterplane_area", d(g.waterplane_area));
  kv("lcg", d(g.lcg));
  kv("yaw_inertia", opt(g.yaw_inertia));
  kv("water_density", d(g.water_density));

  const auto& c = s.condition;
  o << "\n[condition]\n";
  kv("label", std::string(to_string(c.label)));
  kv("mass", d(c.mass));
  kv("X_u", d(c.X_u));
  kv("X_uu", d(c.X_uu));
  kv("draft", opt(c.draft_override));
  kv("top_speed", c.top_speed ? d(*c.top_speed) : "none");

  const auto& m = s.model;
  o << "\n[model]\n";
  kv("surge_added_mass_factor", d(m.surge_added_mass_factor));
  kv("sway_reference_speed", d(m.sway_reference_speed));
  kv("cylinder_drag_coefficient", d(m.cylinder_drag_coefficient));
  kv("symmetric_added_mass", b(m.symmetric_added_mass));
  kv("drag_cap_speed", d(m.drag_cap_speed));
  kv("hull_velocity_sign", std::to_string(m.hull_velocity_sign));
  kv("switching_added_mass", b(m.switching_added_mass));
  kv("decel_added_mass_ratio", d(m.decel_added_mass_ratio));

  const auto& t = s.thruster;
  o << "\n[thruster]\n";
  kv("model", std::string(to_string(t.variant)));
  kv("jet_max", d(t.jet_max));
  kv("a1", d(t.a1));
  kv("a2", d(t.a2));

  if (include_controller) {
    const auto& k = s.controller;
    const auto& gn = k.gains;
    o << "\n[controller]\n";
    kv("kind", std::string(to_string(k.kind)));
    kv("k_u", d(gn.k_u));
    kv("k1", d(gn.k1));
    kv("k2", d(gn.k2));
    kv("k_a_max", d(gn.k_a_max));
    kv("u_dot_a_max", d(gn.u_dot_a_max));
    kv("gamma", d(gn.gamma));
    kv("surge_scale", d(gn.surge_scale));
    kv("yaw_scale", d(gn.yaw_scale));
    kv("yaw_speed_ratio", d(gn.yaw_speed_ratio));
    kv("heading_speed_decay", d(gn.heading_speed_decay));
    kv("linearization", std::string(to_string(k.linearization)));
    kv("assumed", std::string(to_string(k.assumed.label)));
    kv("assumed_mass", d(k.assumed.mass));
    kv("assumed_X_u", d(k.assumed.X_u));
    kv("assumed_X_uu", d(k.assumed.X_uu));
    kv("assumed_draft", opt(k.assumed.draft_override));
    kv("abs_init", std::string(to_string(k.adaptive_init)));
    kv("anti_windup", b(k.anti_windup));
    kv("freeze_secondary", b(k.freeze_secondary));
  }

  o << "\n[initial]\n";
  kv("x", d(s.initial.x()));
  kv("y", d(s.initial.y()));
  kv("psi_deg", d(rad2deg(s.initial.psi())));
  kv("u", d(s.initial.u()));
  kv("v", d(s.initial.v()));
  kv("r_deg_s", d(rad2deg(s.initial.r())));

  o << "\n[setpoints]\n";
  for (const auto& p : s.setpoints) {
    o << format_duration(p.time) << " = " << d(p.u_d) << ", "
      << d(rad2deg(p.psi_d)) << '\n';
  }
  o << "\n[commands]\n";
  for (const auto& p : s.commands) {
    o << format_duration(p.time) << " = " << d(p.command.port) << ", "
      << d(p.command.stbd) << '\n';
  }
  for (const auto& e : s.events) {
    o << "\n[event]\n";
    kv("time", format_duration(e.time));
    kv("kind", std::string(to_string(e.kind)));
    switch (e.kind) {
      case EventKind::kMassDrop:
        kv("delta_m", d(e.delta_m));
        if (e.new_condition) {
          kv("new_condition", std::string(to_string(e.new_condition->label)));
        }
        break;
      case EventKind::kTowAttach:
        kv("tow_coeff", d(e.tow_coeff));
        break;
      case EventKind::kImpulse:
        kv("force", d(e.force));
        kv("duration", format_duration(e.duration));
        break;
      case EventKind::kCommandChange:
        if (e.command) {
          kv("port", d(e.command->port));
          kv("stbd", d(e.command->stbd));
        }
        if (e.u_d) kv("u_d", d(*e.u_d));
        if (e.psi_d) kv("psi_deg", d(rad2deg(*e.psi_d)));
        break;
    }
  }
  return o.str();
}

inline std::string config_hash(const ScenarioSpec& s) {
  return hex64(fnv1a64(to_config_text(s, true)));
}

// Everything except the controller, so BS and ABS runs of one protocol match.
inline std::string scenario_hash(const ScenarioSpec& s) {
  return hex64(fnv1a64(to_config_text(s, false)));
}

}  // namespace usv

#endif  // USV_IO_CONFIG_HPP_
