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

#ifndef USV_MODEL_COEFFICIENTS_HPP_
#define USV_MODEL_COEFFICIENTS_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "usv/core/types.hpp"
#include "usv/model/geometry.hpp"
#include "usv/model/options.hpp"

namespace usv {

// Added mass, linear and quadratic damping. Dimensional terms are negative so
// that D = -[...] is dissipative.
struct HydroCoefficients {
  double m = 0;    // kg, condition mass
  double I_z = 0;  // kg m^2
  double T = 0;    // draft used, m

  double X_udot = 0, Y_vdot = 0, Y_rdot = 0, N_vdot = 0, N_rdot = 0;
  double X_u = 0, Y_v = 0, Y_r = 0, N_v = 0, N_r = 0;
  double X_uu = 0;
  double Y_vv = 0, Y_vr = 0, Y_rv = 0, Y_rr = 0;
  double N_vv = 0, N_vr = 0, N_rv = 0, N_rr = 0;
};

// One row of the coefficient table: value = factor * term.
struct CoefficientRow {
  std::string name;
  double factor;
  double term;
  double value;
  std::string units;
  bool velocity_dependent;
};

namespace detail {

struct HullTerms {
  double a, b;  // distance from LCG to bow and to the aft plane
  double rho, T, L, Bh, Cd;
};

inline HullTerms hull_terms(const VesselGeometry& g,
                            const DisplacementCondition& c,
                            const ModelOptions& opt) {
  g.validate();
  c.validate();
  return {g.length_overall - g.lcg, g.lcg, g.water_density, draft_for(g, c),
          g.length_overall, g.hull_beam, opt.cylinder_drag_coefficient};
}

}  // namespace detail

inline std::vector<CoefficientRow> coefficient_table(
    const VesselGeometry& g, const DisplacementCondition& c, const Vec3& nu,
    const ModelOptions& opt = {}) {
  const auto h = detail::hull_terms(g, c, opt);
  const double pi = kPi, rho = h.rho, T = h.T, L = h.L;
  const double a2b2 = h.a * h.a + h.b * h.b;
  const double a3b3 = h.a * h.a * h.a + h.b * h.b * h.b;
  const double a4b4 = std::pow(h.a, 4) + std::pow(h.b, 4);
  const double U = std::hypot(nu(0), nu(1));
  const double bt = h.Bh / T;
  const double y_v_bracket =
      1.1 + 0.0045 * L / T - 0.1 * bt + 0.016 * bt * bt;

  const double coupling = -pi * rho * T * T * a2b2 / 2.0;
  const double vr = -rho * T * 1.1 / 2.0 * (h.a * h.a - h.b * h.b);
  const double rr = -rho * T * h.Cd / 3.0 * a3b3;

  std::vector<CoefficientRow> rows;
  auto add = [&rows](const char* n, double f, double t, const char* u,
                     bool vd) { rows.push_back({n, f, t, f * t, u, vd}); };
  add("N_vdot", 2.5, coupling, "kg m", false);
  add("N_rdot", 1.2,
      -(4.75 / 2.0 * pi * rho * h.Bh / 2.0 * std::pow(T, 4) +
        pi * rho * T * T * a3b3 / 3.0),
      "kg m^2", false);
  add("X_udot", opt.surge_added_mass_factor, -c.mass, "kg", false);
  add("Y_rdot", 0.2, coupling, "kg m", false);
  add("Y_vdot", 0.9, -pi * rho * T * T * L, "kg", false);
  add("X_u", 1.0, c.X_u, "N s/m", false);
  add("Y_v", 0.5,
      -40.0 * rho * opt.sway_reference_speed * y_v_bracket * (pi * T * L / 2.0),
      "N s/m", false);
  add("N_r", 0.02, -pi * rho * U * T * T * L * L, "N m s", true);
  add("N_v", 0.06, -pi * rho * U * T * T * L, "N s", true);
  add("Y_r", 6.0, -pi * rho * U * T * T * L, "N s", true);
  add("X_uu", 1.0, c.X_uu, "N s^2/m^2", false);
  add("Y_vv", 1.0, -rho * T * h.Cd * L, "N s^2/m^2", false);
  add("Y_vr", 1.0, vr, "N s^2/m", false);
  add("Y_rv", 1.0, vr, "N s^2/m", false);
  add("Y_rr", 1.0, rr, "N s^2", false);
  add("N_vv", 1.0, vr, "N s^2/m", false);
  add("N_vr", 1.0, rr, "N s^2", false);
  add("N_rv", 1.0, rr, "N s^2", false);
  add("N_rr", 1.0, -rho * T * h.Cd / 4.0 * a4b4, "N m s^2", false);
  return rows;
}

inline HydroCoefficients derive_coefficients(const VesselGeometry& g,
                                             const DisplacementCondition& c,
                                             const Vec3& nu,
                                             const ModelOptions& opt = {}) {
  if (!nu.allFinite()) throw ValidationError("velocity must be finite");
  HydroCoefficients k;
  k.m = c.mass;
  k.I_z = yaw_inertia_for(g, c);
  k.T = draft_for(g, c);
  for (const auto& row : coefficient_table(g, c, nu, opt)) {
    const std::string& n = row.name;
    double v = row.value;
    if (n == "N_vdot") k.N_vdot = v;
    else if (n == "N_rdot") k.N_rdot = v;
    else if (n == "X_udot") k.X_udot = v;
    else if (n == "Y_rdot") k.Y_rdot = v;
    else if (n == "Y_vdot") k.Y_vdot = v;
    else if (n == "X_u") k.X_u = v;
    else if (n == "Y_v") k.Y_v = v;
    else if (n == "N_r") k.N_r = v;
    else if (n == "N_v") k.N_v = v;
    else if (n == "Y_r") k.Y_r = v;
    else if (n == "X_uu") k.X_uu = v;
    else if (n == "Y_vv") k.Y_vv = v;
    else if (n == "Y_vr") k.Y_vr = v;
    else if (n == "Y_rv") k.Y_rv = v;
    else if (n == "Y_rr") k.Y_rr = v;
    else if (n == "N_vv") k.N_vv = v;
    else if (n == "N_vr") k.N_vr = v;
    else if (n == "N_rv") k.N_rv = v;
    else if (n == "N_rr") k.N_rr = v;
  }
  return k;
}

}  // namespace usv

#endif  // USV_MODEL_COEFFICIENTS_HPP_
