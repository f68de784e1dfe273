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

#ifndef USV_CLI_APP_HPP_
#define USV_CLI_APP_HPP_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "usv/analysis/compare.hpp"
#include "usv/analysis/fit.hpp"
#include "usv/analysis/steady_state.hpp"
#include "usv/core/types.hpp"
#include "usv/io/config.hpp"
#include "usv/io/csv.hpp"
#include "usv/io/format.hpp"
#include "usv/io/summary.hpp"
#include "usv/model/coefficients.hpp"
#include "usv/propulsion/thruster.hpp"
#include "usv/sim/runner.hpp"
#include "usv/sim/scenario.hpp"

namespace usv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

namespace fs = std::filesystem;

// One JSON line on stderr so harnesses can parse failures.
inline int report_error(std::ostream& err, int code, const std::string& kind,
                        const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["exit_code"] = code;
  auto lines = nlohmann::ordered_json::array();
  std::istringstream is(message);
  std::string l;
  while (std::getline(is, l)) {
    if (!trim(l).empty()) lines.push_back(std::string(trim(l)));
  }
  j["error"]["messages"] = lines;
  err << j.dump() << '\n';
  return code;
}

// Writes to a sibling temp file and renames, so a failed run leaves nothing.
inline void write_atomically(const fs::path& path, const std::string& data) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << data;
    if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

struct RunConfig {
  std::vector<std::string> scenarios;  // builtin names
  std::string config_path;
  std::string geometry_path;
  std::string out_dir = ".";
  std::optional<std::string> controller;
  std::optional<std::string> thruster;
  std::optional<double> dt;
  std::optional<double> duration;
  std::optional<unsigned long long> seed;
  int jobs = 1;
  bool write_csv = true;
  bool write_json = true;
  SteadyConfig steady;
};

struct PreparedRun {
  ScenarioSpec spec;
  std::string stem;
};

// Resolves every scenario and validates all of them before anything runs.
inline std::vector<PreparedRun> prepare_runs(const RunConfig& cfg) {
  std::vector<std::string> errs;
  std::optional<IniDocument> geometry_doc, config_doc;
  auto load = [&errs](const std::string& path,
                      std::optional<IniDocument>& dst, const char* what) {
    if (path.empty()) return;
    if (!fs::exists(path)) {
      errs.push_back(std::string(what) + " file not found: " + path);
      return;
    }
    try {
      dst = load_ini(path);
    } catch (const std::exception& e) {
      errs.push_back(e.what());
    }
  };
  load(cfg.geometry_path, geometry_doc, "geometry");
  load(cfg.config_path, config_doc, "config");
  if (!errs.empty()) {
    std::string m;
    for (const auto& e : errs) m += e + "\n";
    throw ValidationError(m);
  }

  std::vector<std::string> names = cfg.scenarios;
  if (names.empty()) {
    if (config_doc) {
      names.push_back(builtin_name(*config_doc).value_or(""));
    } else {
      throw ValidationError(
          "nothing to run: give a builtin scenario name or --config");
    }
  }

  std::vector<PreparedRun> runs;
  for (const auto& name : names) {
    try {
      ScenarioSpec spec;
      if (!name.empty()) spec = builtin_scenario(name);
      if (geometry_doc) apply_config(spec, *geometry_doc);
      if (config_doc) apply_config(spec, *config_doc);
      if (cfg.controller) {
        spec.controller.kind = controller_kind_from_string(*cfg.controller);
      }
      if (cfg.thruster) {
        const auto v = thruster_variant_from_string(*cfg.thruster);
        if (v == ThrusterVariant::kPumpAnalog &&
            spec.thruster.variant != ThrusterVariant::kPumpAnalog) {
          const double total = 2.0 * spec.thruster.jet_max;
          spec.thruster =
              pump_model_for(spec.condition, total, spec.model.drag_cap_speed);
        } else if (v == ThrusterVariant::kBollardLinear) {
          spec.thruster.variant = v;
        }
      }
      if (cfg.dt) {
        spec.dt = *cfg.dt;
        if (spec.tick < spec.dt) spec.tick = spec.dt;
      }
      if (cfg.duration) spec.duration = *cfg.duration;
      if (cfg.seed) spec.seed = *cfg.seed;
      const auto v = spec.validation_errors();
      if (!v.empty()) {
        std::string m = "scenario '" + spec.name + "':";
        for (const auto& e : v) m += "\n  " + e;
        throw ValidationError(m);
      }
      const std::string stem =
          spec.name + "_" + std::string(to_string(spec.controller.kind));
      runs.push_back({std::move(spec), stem});
    } catch (const std::exception& e) {
      errs.push_back(e.what());
    }
  }
  for (size_t i = 0; i < runs.size(); ++i) {
    for (size_t j = i + 1; j < runs.size(); ++j) {
      if (runs[i].stem == runs[j].stem) {
        errs.push_back("two runs would write the same output '" +
                       runs[i].stem + "'");
      }
    }
  }
  if (!errs.empty()) {
    std::string m;
    for (const auto& e : errs) m += e + "\n";
    throw ValidationError(m);
  }
  return runs;
}

inline int cmd_run(const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  std::vector<PreparedRun> runs;
  try {
    if (cfg.jobs < 1) throw ValidationError("--jobs must be >= 1");
    runs = prepare_runs(cfg);
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (!fs::is_directory(cfg.out_dir)) {
      throw ValidationError("output directory not usable: " + cfg.out_dir);
    }
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation", e.what());
  }

  std::vector<std::string> failures(runs.size());
  std::vector<std::string> produced(runs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < runs.size(); i = next++) {
      const auto& pr = runs[i];
      try {
        const RunLog log0 = run_scenario(pr.spec);
        RunLog log = log0;
        OutputMeta meta{config_hash(pr.spec), scenario_hash(pr.spec)};
        log.scenario_hash = meta.scenario_hash;
        const fs::path base = fs::path(cfg.out_dir) / pr.stem;
        std::string csv_text, json_text;
        if (cfg.write_csv) {
          std::ostringstream os;
          write_runlog_csv(os, log, meta);
          csv_text = os.str();
        }
        if (cfg.write_json) {
          auto j = run_summary(log, meta, cfg.steady);
          j["config"] = to_config_text(pr.spec);
          json_text = j.dump(2) + "\n";
        }
        if (cfg.write_csv) write_atomically(base.string() + ".csv", csv_text);
        if (cfg.write_json) {
          write_atomically(base.string() + ".json", json_text);
        }
        produced[i] = base.string();
      } catch (const std::exception& e) {
        failures[i] = pr.stem + ": " + e.what();
      }
    }
  };
  const int n = std::min<int>(cfg.jobs, static_cast<int>(runs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::string fail;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (!failures[i].empty()) {
      fail += failures[i] + "\n";
    } else {
      out << "wrote " << produced[i] << (cfg.write_csv ? ".csv" : "")
          << (cfg.write_json ? " .json" : "") << " (config "
          << config_hash(runs[i].spec) << ")\n";
    }
  }
  if (!fail.empty()) return report_error(err, kExitRuntime, "runtime", fail);
  return kExitOk;
}

inline void print_report(std::ostream& out, const ComparisonReport& rep) {
  out << "scenario: " << rep.scenario << '\n';
  out << std::left << std::setw(36) << "metric" << std::right << std::setw(14)
      << rep.label_a << std::setw(14) << rep.label_b << std::setw(12)
      << "lambda %" << "  better\n";
  out << std::fixed;
  for (const auto& r : rep.rows) {
    out << std::left << std::setw(36) << (r.metric + " (" + r.unit + ")")
        << std::right;
    if (!r.available) {
      out << std::setw(14) << "n/a" << std::setw(14) << "n/a" << std::setw(12)
          << "n/a" << "  n/a\n";
      continue;
    }
    out << std::setw(14) << std::setprecision(4) << r.value_a << std::setw(14)
        << r.value_b << std::setw(12) << std::setprecision(1) << r.lambda
        << "  " << r.winner << '\n';
  }
  out.unsetf(std::ios::floatfield);
  out << std::setprecision(6);
}

struct CompareConfig {
  std::string log_a, log_b;
  std::string out_dir;
  SteadyConfig steady;
};

inline int cmd_compare(const CompareConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  try {
    const RunLog a = load_runlog_csv(cfg.log_a);
    const RunLog b = load_runlog_csv(cfg.log_b);
    const auto rep = compare_controllers(a, b, cfg.steady);
    print_report(out, rep);
    if (!cfg.out_dir.empty()) {
      fs::create_directories(cfg.out_dir);
      std::ostringstream csv;
      csv << "# tool=" << kToolName << " version=" << kToolVersion
          << " scenario_hash=" << a.scenario_hash << '\n';
      csv << "metric,unit,value_a,value_b,lambda_percent,winner\n";
      for (const auto& r : rep.rows) {
        csv << r.metric << ',' << r.unit << ',' << format_double(r.value_a)
            << ',' << format_double(r.value_b) << ','
            << format_double(r.lambda) << ',' << r.winner << '\n';
      }
      const fs::path base = fs::path(cfg.out_dir) / "comparison";
      write_atomically(base.string() + ".csv", csv.str());
      write_atomically(
          base.string() + ".json",
          report_json(rep, a.scenario_hash, b.scenario_hash).dump(2) + "\n");
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitRuntime, "runtime", e.what());
  }
}

struct FitConfig {
  std::string points_path;
  std::string model = "surge_drag";  // surge_drag | tow_drag | thrust_decay
  std::string fragment_path;
  // thrust_decay calibration without points
  double bollard_total = 204.0;
  std::optional<double> target_speed;
  std::string condition = "lightship";
};

inline int cmd_fit(const FitConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  try {
    std::ostringstream frag;
    frag << "# " << kToolName << " " << kToolVersion << " fit " << cfg.model
         << '\n';
    NumericTable tab;
    if (!cfg.points_path.empty()) tab = load_numeric_csv(cfg.points_path);
    auto need_cols = [&](size_t n) {
      if (cfg.points_path.empty()) {
        throw ValidationError("fit " + cfg.model + " needs a points CSV");
      }
      if (tab.rows.empty()) throw ValidationError("points CSV has no rows");
      if (tab.rows.front().size() < n) {
        throw ValidationError("points CSV needs " + std::to_string(n) +
                              " columns");
      }
    };
    out << std::setprecision(12);
    if (cfg.model == "surge_drag") {
      need_cols(2);
      std::vector<DragPoint> pts;
      for (const auto& r : tab.rows) pts.push_back({r[0], r[1]});
      DragFit f;
      try {
        f = fit_drag_quadratic(pts);
      } catch (const ValidationError& e) {
        throw ValidationError(
            std::string(e.what()) +
            "\nhint: supply at least 3 rows spanning two or more distinct "
            "speeds");
      }
      out << "X_uu " << f.X_uu << "\nX_u " << f.X_u << "\nresidual_rms "
          << f.residual_rms << "\nsamples " << f.samples << '\n';
      frag << "[condition]\nlabel = custom\nX_u = " << format_double(f.X_u)
           << "\nX_uu = " << format_double(f.X_uu) << '\n';
    } else if (cfg.model == "tow_drag") {
      need_cols(2);
      std::vector<DragPoint> pts;
      for (const auto& r : tab.rows) pts.push_back({r[0], r[1]});
      const auto f = fit_tow_drag(pts);
      out << "c_t " << f.c_t << "\nresidual_rms " << f.residual_rms
          << "\nsamples " << f.samples << "\nvalid_range " << f.valid_min
          << " " << f.valid_max << '\n';
      for (size_t i : f.out_of_range) {
        out << "warning: point " << i << " (u=" << pts[i].u
            << ") outside the validity range\n";
      }
      frag << "[event]\nkind = tow_attach\ntime = 0\ntow_coeff = "
           << format_double(f.c_t) << '\n';
    } else if (cfg.model == "thrust_decay") {
      double a1, a2;
      if (!cfg.points_path.empty()) {
        need_cols(3);
        std::vector<ThrustPoint> pts;
        for (const auto& r : tab.rows) pts.push_back({r[0], r[1], r[2]});
        const auto f = fit_thrust_model(pts);
        a1 = f.a1;
        a2 = f.a2;
        out << "residual_rms " << f.residual_rms << "\nsamples " << f.samples
            << '\n';
      } else {
        const auto c =
            preset_condition(condition_label_from_string(cfg.condition));
        const double speed = cfg.target_speed.value_or(
            c.top_speed ? *c.top_speed : 0.0);
        a1 = calibrate_thrust_decay(cfg.bollard_total, speed, c);
        a2 = 0.5 * cfg.bollard_total;
        out << "target_speed " << speed << "\n";
      }
      out << "a1_per_jet " << a1 << "\na1_total " << 2.0 * a1
          << "\na2_per_jet " << a2 << '\n';
      frag << "[thruster]\nmodel = pump\na1 = " << format_double(a1)
           << "\na2 = " << format_double(a2) << '\n';
    } else {
      throw ValidationError("unknown fit model '" + cfg.model +
                            "' (expected surge_drag, tow_drag or "
                            "thrust_decay)");
    }
    if (!cfg.fragment_path.empty()) {
      write_atomically(cfg.fragment_path, frag.str());
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitRuntime, "runtime", e.what());
  }
}

struct DeriveConfig {
  std::string geometry_path;
  std::string condition = "lightship";
  double u = 0, v = 0, r = 0;
  std::string out_path;
};

inline int cmd_derive_coeffs(const DeriveConfig& cfg, std::ostream& out,
                             std::ostream& err) {
  try {
    ScenarioSpec spec;
    spec.condition =
        preset_condition(condition_label_from_string(cfg.condition));
    if (!cfg.geometry_path.empty()) {
      if (!fs::exists(cfg.geometry_path)) {
        throw ValidationError("geometry file not found: " + cfg.geometry_path);
      }
      apply_config(spec, load_ini(cfg.geometry_path));
    }
    spec.geometry.validate();
    spec.condition.validate();
    const Vec3 nu(cfg.u, cfg.v, cfg.r);
    const auto rows =
        coefficient_table(spec.geometry, spec.condition, nu, spec.model);
    const auto k = derive_coefficients(spec.geometry, spec.condition, nu,
                                       spec.model);
    std::ostringstream csv;
    csv << "# tool=" << kToolName << " version=" << kToolVersion
        << " config_hash=" << config_hash(spec) << " condition="
        << to_string(spec.condition.label) << " u=" << format_double(cfg.u)
        << " v=" << format_double(cfg.v) << " r=" << format_double(cfg.r)
        << '\n';
    csv << "coefficient,factor,dimensional_term,value,units,note\n";
    auto line = [&csv](const std::string& n, double f, double t, double v,
                       const std::string& u, const std::string& note) {
      csv << n << ',' << format_double(f) << ',' << format_double(t) << ','
          << format_double(v) << ',' << u << ',' << note << '\n';
    };
    line("m", 1.0, k.m, k.m, "kg", "");
    line("I_z", 1.0, k.I_z, k.I_z, "kg m^2",
         spec.geometry.yaw_inertia ? "" : "estimated");
    line("T", 1.0, k.T, k.T, "m", "");
    const bool at_rest = std::hypot(cfg.u, cfg.v) == 0.0;
    for (const auto& r : rows) {
      std::string note;
      if (r.velocity_dependent) {
        note = at_rest ? "velocity-dependent (zero at rest)"
                       : "velocity-dependent";
      }
      line(r.name, r.factor, r.term, r.value, r.units, note);
    }
    out << csv.str();
    if (!cfg.out_path.empty()) write_atomically(cfg.out_path, csv.str());
    return kExitOk;
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitRuntime, "runtime", e.what());
  }
}

struct PlotConfig {
  std::string log_path;
  std::string channels = "u,psi,r";
  std::string out_path;
};

// Long format t,channel,value.
inline int cmd_plot_data(const PlotConfig& cfg, std::ostream& out,
                         std::ostream& err) {
  try {
    const RunLog log = load_runlog_csv(cfg.log_path);
    std::vector<std::string> names;
    std::string_view s = cfg.channels;
    while (!s.empty()) {
      const auto c = s.find(',');
      names.emplace_back(trim(s.substr(0, c)));
      if (c == std::string_view::npos) break;
      s.remove_prefix(c + 1);
    }
    std::vector<std::vector<double>> cols;
    for (const auto& n : names) cols.push_back(channel(log, n));
    std::ostringstream csv;
    csv << "# tool=" << kToolName << " version=" << kToolVersion
        << " scenario_hash=" << log.scenario_hash << '\n';
    csv << "t,channel,value\n";
    for (size_t c = 0; c < names.size(); ++c) {
      for (size_t i = 0; i < log.records.size(); ++i) {
        csv << format_double(log.records[i].t) << ',' << names[c] << ','
            << format_double(cols[c][i]) << '\n';
      }
    }
    if (cfg.out_path.empty()) {
      out << csv.str();
    } else {
      write_atomically(cfg.out_path, csv.str());
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    return report_error(err, kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitRuntime, "runtime", e.what());
  }
}

inline void add_steady_options(CLI::App* sub, SteadyConfig& s,
                               double& heading_deg) {
  sub->add_option("--window", s.window, "Steady-state window, s")
      ->capture_default_str();
  sub->add_option("--speed-tol", s.speed_tol,
                  "Rolling std threshold for speed, m/s")
      ->capture_default_str();
  sub->add_option("--heading-tol-deg", heading_deg,
                  "Rolling std threshold for heading, deg")
      ->capture_default_str();
  sub->add_option("--exclusion", s.exclusion,
                  "Seconds dropped after each event")
      ->capture_default_str();
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Twin hull waterjet USV maneuvering simulator"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RunConfig rc;
  double run_heading = 0.5;
  std::string controller, thruster;
  double dt = 0, duration = 0;
  unsigned long long seed = 0;
  std::string formats = "csv,json";
  auto* run = app.add_subcommand("run", "Run builtin or configured scenarios");
  run->add_option("scenarios", rc.scenarios,
                  "Builtin scenario names (acceleration, zigzag, setpoint, "
                  "variable-mass, variable-drag, variable-mass-drag)");
  run->add_option("--config", rc.config_path, "Scenario config file");
  run->add_option("--geometry", rc.geometry_path,
                  "Geometry/condition config applied first");
  run->add_option("--out", rc.out_dir, "Output directory")
      ->capture_default_str();
  auto* o_ctrl = run->add_option("--controller", controller,
                                 "Controller: bs, abs or open")
                     ->check(CLI::IsMember({"bs", "abs", "open"}));
  auto* o_thr = run->add_option("--thruster", thruster, "bollard or pump")
                    ->check(CLI::IsMember({"bollard", "pump"}));
  auto* o_dt = run->add_option("--dt", dt, "Integrator step, s");
  auto* o_dur = run->add_option("--duration", duration, "Run length, s");
  auto* o_seed = run->add_option("--seed", seed, "Noise seed");
  run->add_option("--jobs", rc.jobs, "Concurrent runs")->capture_default_str();
  run->add_option("--formats", formats, "csv, json or csv,json")
      ->capture_default_str();
  add_steady_options(run, rc.steady, run_heading);

  CompareConfig cc;
  double cmp_heading = 0.5;
  auto* cmp = app.add_subcommand("compare", "Compare two run logs");
  cmp->add_option("log_a", cc.log_a, "Log A (CSV)")->required();
  cmp->add_option("log_b", cc.log_b, "Log B (CSV)")->required();
  cmp->add_option("--out", cc.out_dir, "Directory for comparison.csv/json");
  add_steady_options(cmp, cc.steady, cmp_heading);

  FitConfig fc;
  double target = 0;
  auto* fit = app.add_subcommand("fit", "Fit drag or thrust models");
  fit->add_option("points", fc.points_path, "CSV of (u, force) or "
                                            "(u, command, force) rows");
  fit->add_option("--model", fc.model, "surge_drag, tow_drag, thrust_decay")
      ->check(CLI::IsMember({"surge_drag", "tow_drag", "thrust_decay"}))
      ->capture_default_str();
  fit->add_option("--out", fc.fragment_path, "Write a config fragment");
  fit->add_option("--bollard", fc.bollard_total, "Bollard pull, N (total)")
      ->capture_default_str();
  auto* o_target =
      fit->add_option("--target-speed", target, "Top speed to match, m/s");
  fit->add_option("--condition", fc.condition, "slick, lightship or full")
      ->capture_default_str();

  DeriveConfig dc;
  auto* der = app.add_subcommand("derive-coeffs",
                                 "Print the hydrodynamic coefficient table");
  der->add_option("--config", dc.geometry_path, "Geometry config file");
  der->add_option("--condition", dc.condition, "slick, lightship or full")
      ->capture_default_str();
  der->add_option("--u", dc.u, "Reference surge speed, m/s");
  der->add_option("--v", dc.v, "Reference sway speed, m/s");
  der->add_option("--r", dc.r, "Reference yaw rate, rad/s");
  der->add_option("--out", dc.out_path, "Also write the table here");

  PlotConfig pc;
  auto* plot = app.add_subcommand("plot-data", "Emit tidy t,channel,value");
  plot->add_option("log", pc.log_path, "Run log CSV")->required();
  plot->add_option("--channels", pc.channels, "Comma separated channels")
      ->capture_default_str();
  plot->add_option("--out", pc.out_path, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolName << " " << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    return report_error(err, kExitValidation, "usage", e.what());
  }

  if (*run) {
    if (*o_ctrl) rc.controller = controller;
    if (*o_thr) rc.thruster = thruster;
    if (*o_dt) rc.dt = dt;
    if (*o_dur) rc.duration = duration;
    if (*o_seed) rc.seed = seed;
    rc.write_csv = formats.find("csv") != std::string::npos;
    rc.write_json = formats.find("json") != std::string::npos;
    rc.steady.heading_tol = deg2rad(run_heading);
    return cmd_run(rc, out, err);
  }
  if (*cmp) {
    cc.steady.heading_tol = deg2rad(cmp_heading);
    return cmd_compare(cc, out, err);
  }
  if (*fit) {
    if (*o_target) fc.target_speed = target;
    return cmd_fit(fc, out, err);
  }
  if (*der) return cmd_derive_coeffs(dc, out, err);
  if (*plot) return cmd_plot_data(pc, out, err);
  return kExitValidation;
}

}  // namespace usv::cli

#endif  // USV_CLI_APP_HPP_
