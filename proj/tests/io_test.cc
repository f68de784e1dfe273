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

#include <sstream>

#include <gtest/gtest.h>

#include "usv/io/config.hpp"
#include "usv/io/csv.hpp"
#include "usv/io/format.hpp"
#include "usv/io/summary.hpp"
#include "usv/sim/runner.hpp"

namespace usv {
namespace {

TEST(Format, ShortestRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 123456.789, 0.0}) {
    double y;
    ASSERT_TRUE(try_parse_double(format_double(x), y));
    EXPECT_EQ(x, y);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Format, Durations) {
  EXPECT_DOUBLE_EQ(parse_seconds("PT1M18S", "t"), 78.0);
  EXPECT_DOUBLE_EQ(parse_seconds("PT42S", "t"), 42.0);
  EXPECT_DOUBLE_EQ(parse_seconds("87s", "t"), 87.0);
  EXPECT_DOUBLE_EQ(parse_seconds("0.5", "t"), 0.5);
  EXPECT_DOUBLE_EQ(parse_seconds("PT1H", "t"), 3600.0);
  EXPECT_DOUBLE_EQ(parse_seconds(format_duration(1e-5), "t"), 1e-5);
  EXPECT_THROW(parse_seconds("PT", "t"), ValidationError);
  EXPECT_THROW(parse_seconds("PT5X", "t"), ValidationError);
  EXPECT_THROW(parse_seconds("soon", "t"), ValidationError);
}

TEST(Format, FnvKnownVectors) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(Ini, ParsesSectionsAndComments) {
  const auto doc = parse_ini(
      "# top\n[scenario]\nname = demo ; trailing\n\n[event]\nkind = "
      "impulse\n[event]\nkind = tow_attach\n");
  ASSERT_EQ(doc.sections.size(), 3u);
  EXPECT_EQ(doc.sections[0].entries[0].value, "demo");
  EXPECT_EQ(doc.sections[2].entries[0].line, 8);
}

TEST(Ini, ReportsEveryBadLine) {
  try {
    parse_ini("oops\n[a\n[b]\nnovalue\n", "x.cfg");
    FAIL();
  } catch (const ValidationError& e) {
    const std::string m = e.what();
    EXPECT_NE(m.find("x.cfg:1"), std::string::npos);
    EXPECT_NE(m.find("x.cfg:2"), std::string::npos);
    EXPECT_NE(m.find("x.cfg:4"), std::string::npos);
  }
}

TEST(Config, AppliesAndCollectsErrors) {
  ScenarioSpec s = builtin_scenario("variable-mass");
  apply_config(s, parse_ini("[controller]\nkind = bs\nk_u = 4\n"
                            "[scenario]\nduration = PT100S\n"));
  EXPECT_EQ(s.controller.kind, ControllerKind::kBackstepping);
  EXPECT_DOUBLE_EQ(s.controller.gains.k_u, 4.0);
  EXPECT_DOUBLE_EQ(s.duration, 100.0);
  try {
    apply_config(s, parse_ini("[controller]\nkind = pid\nbogus = 1\n"
                              "[nowhere]\nx = 1\n"));
    FAIL();
  } catch (const ValidationError& e) {
    const std::string m = e.what();
    EXPECT_NE(m.find("unknown controller"), std::string::npos) << m;
    EXPECT_NE(m.find("unknown key 'bogus'"), std::string::npos) << m;
    EXPECT_NE(m.find("unknown section [nowhere]"), std::string::npos) << m;
  }
}

TEST(Config, PumpCalibratesFromCondition) {
  ScenarioSpec s;
  apply_config(s, parse_ini("[condition]\nlabel = full\n[thruster]\n"
                            "model = pump\n"));
  EXPECT_EQ(s.thruster.variant, ThrusterVariant::kPumpAnalog);
  EXPECT_NEAR(2 * pump_analog_thrust(1.0, 2.5, s.thruster),
              surge_drag(full_condition(), 2.5), 1e-9);
}

TEST(Config, CanonicalTextRoundTrips) {
  for (const auto& n : builtin_scenario_names()) {
    const auto a = builtin_scenario(n);
    ScenarioSpec b;
    apply_config(b, parse_ini(to_config_text(a)));
    EXPECT_EQ(to_config_text(a), to_config_text(b)) << n;
    EXPECT_EQ(config_hash(a), config_hash(b));
  }
}

TEST(Config, ScenarioHashIgnoresController) {
  auto a = builtin_scenario("variable-drag");
  auto b = a;
  b.controller.kind = ControllerKind::kBackstepping;
  EXPECT_EQ(scenario_hash(a), scenario_hash(b));
  EXPECT_NE(config_hash(a), config_hash(b));
  b.events.front().tow_coeff = 80;
  EXPECT_NE(scenario_hash(a), scenario_hash(b));
}

RunLog SmallLog() {
  return run_scenario(scenario_setpoint(1.0, 0.0, 1.0, 30.0, 3.0));
}

TEST(Csv, RoundTripsEveryColumn) {
  const auto log = SmallLog();
  std::ostringstream os;
  write_runlog_csv(os, log, {"c0ffee", "beef"});
  std::istringstream is(os.str());
  const auto back = read_runlog_csv(is);
  EXPECT_EQ(back.scenario_hash, "beef");
  EXPECT_EQ(back.scenario, "setpoint");
  EXPECT_EQ(back.controller, "bs");
  ASSERT_EQ(back.records.size(), log.records.size());
  EXPECT_EQ(back.event_times, log.event_times);
  std::ostringstream os2;
  write_runlog_csv(os2, back, {"c0ffee", "beef"});
  EXPECT_EQ(os.str(), os2.str());
}

TEST(Csv, FirstLineCarriesMetadata) {
  std::ostringstream os;
  write_runlog_csv(os, SmallLog(), {"aa", "bb"});
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("# tool=usvsim version=1.0.0 config_hash=aa "
                    "scenario_hash=bb",
                    0),
            0u);
}

TEST(Csv, TruncatedRowNamesTheLine) {
  std::ostringstream os;
  write_runlog_csv(os, SmallLog(), {});
  std::string s = os.str();
  s.resize(s.size() - 40);
  std::istringstream is(s);
  try {
    read_runlog_csv(is, "log.csv");
    FAIL();
  } catch (const CsvParseError& e) {
    EXPECT_GT(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
}

TEST(Csv, MissingColumnAndBadTime) {
  std::istringstream a("t,u\n0,1\n");
  EXPECT_THROW(read_runlog_csv(a), CsvParseError);
  std::ostringstream os;
  auto log = SmallLog();
  std::swap(log.records[3], log.records[4]);
  write_runlog_csv(os, log, {});
  std::istringstream b(os.str());
  EXPECT_THROW(read_runlog_csv(b), CsvParseError);
}

TEST(Csv, NumericTableWithOptionalHeader) {
  std::istringstream a("u,D\n0.5,26\n1.0,48\n");
  const auto t = read_numeric_csv(a, "pts");
  EXPECT_EQ(t.header.size(), 2u);
  EXPECT_EQ(t.rows.size(), 2u);
  std::istringstream b("0.5,26\n1.0\n");
  EXPECT_THROW(read_numeric_csv(b, "pts"), CsvParseError);
}

TEST(Summary, CarriesHashesAndMetrics) {
  const auto log = run_scenario(scenario_variable_drag());
  const auto j = run_summary(log, {"c1", "s1"}, SteadyConfig{});
  EXPECT_EQ(j["config_hash"], "c1");
  EXPECT_EQ(j["event_times"].size(), 1u);
  EXPECT_TRUE(j["metrics"]["after"]["speed"]["available"].get<bool>());
  EXPECT_LT(j["metrics"]["after"]["speed"]["speed_error"].get<double>(), 0.02);
}

}  // namespace
}  // namespace usv
