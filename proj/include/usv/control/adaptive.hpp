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

#ifndef USV_CONTROL_ADAPTIVE_HPP_
#define USV_CONTROL_ADAPTIVE_HPP_

#include <cmath>
#include <string>
#include <string_view>

#include "usv/control/backstepping.hpp"
#include "usv/core/types.hpp"
#include "usv/model/dynamics.hpp"
#include "usv/propulsion/thruster.hpp"

namespace usv {

// Estimates live in effective units, i.e. already divided by surge_scale.
struct AdaptiveState {
  double X_u_hat = 0;
  double X_uu_hat = 0;
  double a_d_hat = 0;
  double u_m = 0;
  double a_m = 1.2;
  double b_m = 1.2;
};

// Exact zero-order-hold update of u_m' = -a_m u_m + b_m u_d.
inline double reference_model_step(const AdaptiveState& s, double u_d,
                                   double dt) {
  require(dt > 0, "dt must be > 0");
  const double e = std::exp(-s.a_m * dt);
  return e * s.u_m + (1.0 - e) * (s.b_m / s.a_m) * u_d;
}

struct AdaptiveRates {
  double X_u = 0, X_uu = 0, a_d = 0;
};

// Gradient law for tau_c = ... + Xhat_u u + Xhat_uu u|u| + ad_hat u_d under
// the resistance convention. h is the effective surge inertia.
inline AdaptiveRates adaptation_rates(double e_m, double u, double u_d,
                                      double gamma, double h) {
  const double sg = h >= 0 ? 1.0 : -1.0;
  return {-gamma * e_m * u * sg, -gamma * e_m * signed_square(u) * sg,
          -gamma * e_m * u_d * sg};
}

inline double abs_surge_force(const Vec3& nu, const AdaptiveState& s,
                              double u_d, const HydroCoefficients& k,
                              const ControllerGains& g) {
  const double tau_c = -(k.m - k.Y_vdot) * nu(1) * nu(2) + s.X_u_hat * nu(0) +
                       s.X_uu_hat * signed_square(nu(0)) + s.a_d_hat * u_d;
  return tau_c * g.surge_scale;
}

// Plant parameters in the same effective units as the estimates.
struct PlantTruth {
  double h = 0;     // (m - X_udot) / scale
  double X_u = 0;   // / scale
  double X_uu = 0;  // resistance quadratic plus tow, / scale
};

struct LyapunovValue {
  double V = 0;
  double V_dot = 0;
};

inline LyapunovValue lyapunov_diagnostics(const AdaptiveState& s,
                                          const PlantTruth& p, double e_m,
                                          double h, double a_m, double b_m,
                                          double gamma) {
  const double ah = std::abs(h);
  const double d1 = s.X_u_hat - (p.X_u - h * a_m);
  const double d2 = s.X_uu_hat - p.X_uu;
  const double d3 = s.a_d_hat - h * b_m;
  LyapunovValue out;
  out.V = ah * e_m * e_m + (d1 * d1 + d2 * d2 + d3 * d3) / gamma;
  out.V_dot = -2.0 * a_m * ah * e_m * e_m;
  return out;
}

enum class AdaptiveInit { kMatched, kTable };

inline std::string_view to_string(AdaptiveInit i) {
  return i == AdaptiveInit::kMatched ? "matched" : "table";
}

inline AdaptiveInit adaptive_init_from_string(std::string_view s) {
  if (s == "matched") return AdaptiveInit::kMatched;
  if (s == "table") return AdaptiveInit::kTable;
  throw ValidationError("unknown adaptive init '" + std::string(s) +
                        "' (expected matched or table)");
}

struct AdaptiveOutput {
  ControlOutput control;
  double e_m = 0;
  double u_m = 0;
  bool saturated = false;
  bool adapt_paused = false;
};

// Backstepping heading plus model reference adaptive surge.
class AdaptiveBacksteppingController {
 public:
  AdaptiveBacksteppingController(const VesselModel& assumed,
                                 const ControllerGains& gains,
                                 AdaptiveInit init = AdaptiveInit::kMatched,
                                 bool anti_windup = true,
                                 bool freeze_secondary = false,
                                 double jet_max = 102.0)
      : model_(assumed),
        gains_(gains),
        anti_windup_(anti_windup),
        freeze_secondary_(freeze_secondary),
        jet_max_(jet_max) {
    gains_.validate();
    const auto k = model_.coefficients(Vec3::Zero());
    h_ = (k.m - k.X_udot) / gains_.surge_scale;
    gamma_eff_ = gains_.gamma * h_;
    st_.a_m = st_.b_m = gains_.k_a_max;
    if (init == AdaptiveInit::kMatched) {
      st_.X_u_hat = k.X_u / gains_.surge_scale - h_ * st_.a_m;
      st_.X_uu_hat = k.X_uu / gains_.surge_scale;
    } else {
      st_.X_u_hat = k.X_u;
      st_.X_uu_hat = k.X_uu;
    }
    st_.a_d_hat = h_ * st_.b_m;
  }

  void reset(double u0) { st_.u_m = u0; }

  const AdaptiveState& state() const { return st_; }
  double effective_inertia() const { return h_; }
  double effective_gamma() const { return gamma_eff_; }
  const ControllerGains& gains() const { return gains_; }

  AdaptiveOutput step(const SimState& s, const Setpoint& sp, double tick) {
    AdaptiveOutput out;
    const auto k = model_.coefficients(s.nu);
    auto& c = out.control;
    c.e_psi = heading_error(s.psi(), sp.psi_d);
    c.u_d_ref = sp.u_d;
    c.u_d_traj = st_.u_m;
    out.u_m = st_.u_m;
    out.e_m = s.u() - st_.u_m;
    c.e_u = out.e_m;
    c.tau_x = abs_surge_force(s.nu, st_, sp.u_d, k, gains_);
    c.tau_z = bs_heading(s.nu, c.e_psi, s.r(), k, gains_);

    const auto a = allocate(c.tau_x, c.tau_z, model_.geometry().hull_separation,
                            jet_max_);
    auto outside = [this](double t) { return t < 0.0 || t > jet_max_; };
    out.saturated = outside(a.port_raw) || outside(a.stbd_raw);
    out.adapt_paused =
        anti_windup_ && outside(a.port_raw) && outside(a.stbd_raw);

    if (!out.adapt_paused) {
      const auto d = adaptation_rates(out.e_m, s.u(), sp.u_d, gamma_eff_, h_);
      st_.X_u_hat += d.X_u * tick;
      if (!freeze_secondary_) {
        st_.X_uu_hat += d.X_uu * tick;
        st_.a_d_hat += d.a_d * tick;
      }
    }
    st_.u_m = reference_model_step(st_, sp.u_d, tick);
    return out;
  }

 private:
  VesselModel model_;
  ControllerGains gains_;
  bool anti_windup_;
  bool freeze_secondary_;
  double jet_max_;
  double h_ = 0;
  double gamma_eff_ = 0;
  AdaptiveState st_;
};

}  // namespace usv

#endif  // USV_CONTROL_ADAPTIVE_HPP_
