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

#ifndef USV_MODEL_DYNAMICS_HPP_
#define USV_MODEL_DYNAMICS_HPP_

#include <cmath>

#include "usv/core/types.hpp"
#include "usv/model/coefficients.hpp"
#include "usv/model/geometry.hpp"
#include "usv/model/options.hpp"

namespace usv {

inline Mat3 kinematic_transform(double psi) {
  const double c = std::cos(psi), s = std::sin(psi);
  Mat3 J;
  J << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return J;
}

// Resistance magnitude, odd in u. Linear with slope X_u past the cap so the
// curve never turns over.
inline double surge_drag(const DisplacementCondition& c, double u,
                         double cap = 3.2) {
  const double a = std::abs(u);
  double d;
  if (a <= cap) {
    d = c.X_u * a + c.X_uu * a * a;
  } else {
    d = c.X_u * cap + c.X_uu * cap * cap + c.X_u * (a - cap);
  }
  return u < 0 ? -d : d;
}

struct HullDrag {
  double port;
  double stbd;
  double yaw_moment;  // N m, about the body z axis (NED)
};

// Each hull carries half of the fitted drag at its own speed.
inline HullDrag hull_drag_split(const DisplacementCondition& c, const Vec3& nu,
                                const VesselGeometry& g,
                                const ModelOptions& opt = {}) {
  const double half_b = 0.5 * g.hull_separation;
  const double s = opt.hull_velocity_sign;
  const double u_port = nu(0) + s * nu(2) * half_b;
  const double u_stbd = nu(0) - s * nu(2) * half_b;
  HullDrag h;
  h.port = 0.5 * surge_drag(c, u_port, opt.drag_cap_speed);
  h.stbd = 0.5 * surge_drag(c, u_stbd, opt.drag_cap_speed);
  // Port hull sits at y = -B/2.
  h.yaw_moment = (h.stbd - h.port) * half_b;
  return h;
}

inline Mat3 mass_matrix(const HydroCoefficients& k,
                        const ModelOptions& opt = {}) {
  double m23 = -k.Y_rdot, m32 = -k.N_vdot;
  if (opt.symmetric_added_mass) m23 = m32 = -0.5 * (k.Y_rdot + k.N_vdot);
  Mat3 M;
  M << k.m - k.X_udot, 0, 0,
       0, k.m - k.Y_vdot, m23,
       0, m32, k.I_z - k.N_rdot;
  return M;
}

// Throws if the symmetric part of M is not positive definite.
inline void check_mass_matrix(const Mat3& M) {
  Mat3 sym = 0.5 * (M + M.transpose());
  Eigen::LLT<Mat3> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("mass matrix is not positive definite");
  }
}

// Rigid body plus added mass, the added mass (1,3)/(3,1) pair scaled by 1/200.
inline Mat3 coriolis_matrix(const HydroCoefficients& k, const Vec3& nu) {
  const double u = nu(0), v = nu(1), r = nu(2);
  const double a13 =
      (k.Y_vdot * v + 0.5 * (k.Y_rdot + k.N_vdot) * r) / 200.0;
  Mat3 C;
  C << 0, 0, -k.m * v + a13,
       0, 0, k.m * u - k.X_udot * u,
       k.m * v - a13, -k.m * u + k.X_udot * u, 0;
  return C;
}

// Sway/yaw damping. Surge row is zero: surge resistance goes through the
// hull split instead.
inline Mat3 damping_matrix(const HydroCoefficients& k, const Vec3& nu) {
  const double av = std::abs(nu(1)), ar = std::abs(nu(2));
  Mat3 D = Mat3::Zero();
  D(1, 1) = -(k.Y_v + k.Y_vv * av + k.Y_vr * ar);
  D(1, 2) = -(k.Y_r + k.Y_rv * av + k.Y_rr * ar);
  D(2, 1) = -(k.N_v + k.N_vv * av + k.N_vr * ar);
  D(2, 2) = -(k.N_r + k.N_rv * av + k.N_rr * ar);
  return D;
}

// Geometry, loading and options with the velocity independent coefficients
// cached. Cheap to copy.
class VesselModel {
 public:
  VesselModel() : VesselModel(VesselGeometry{}, lightship_condition()) {}

  VesselModel(const VesselGeometry& g, const DisplacementCondition& c,
              const ModelOptions& opt = {})
      : geom_(g), cond_(c), opt_(opt) {
    opt_.validate();
    base_ = derive_coefficients(g, c, Vec3::Zero(), opt);
    // N_r, N_v and Y_r are linear in sqrt(u^2 + v^2).
    const auto unit = derive_coefficients(g, c, Vec3(1, 0, 0), opt);
    N_r_unit_ = unit.N_r;
    N_v_unit_ = unit.N_v;
    Y_r_unit_ = unit.Y_r;
    M_ = mass_matrix(base_, opt_);
    check_mass_matrix(M_);
  }

  const VesselGeometry& geometry() const { return geom_; }
  const DisplacementCondition& condition() const { return cond_; }
  const ModelOptions& options() const { return opt_; }
  const Mat3& mass() const { return M_; }

  HydroCoefficients coefficients(const Vec3& nu) const {
    HydroCoefficients k = base_;
    const double U = std::hypot(nu(0), nu(1));
    k.N_r = N_r_unit_ * U;
    k.N_v = N_v_unit_ * U;
    k.Y_r = Y_r_unit_ * U;
    return k;
  }

  // n(nu) with M nu_dot = tau - n(nu).
  Vec3 bias_forces(const Vec3& nu) const {
    const auto k = coefficients(nu);
    const auto h = hull_drag_split(cond_, nu, geom_, opt_);
    Vec3 n = coriolis_matrix(k, nu) * nu + damping_matrix(k, nu) * nu;
    n(0) += h.port + h.stbd;
    n(2) -= h.yaw_moment;
    return n;
  }

  Vec3 body_acceleration(const Vec3& nu, const GeneralizedForce& tau) const {
    const Vec3 rhs = tau - bias_forces(nu);
    Vec3 acc = M_.partialPivLu().solve(rhs);
    if (opt_.switching_added_mass && acc(0) < 0) {
      Mat3 M2 = M_;
      M2(0, 0) = base_.m - opt_.decel_added_mass_ratio * base_.X_udot;
      acc = M2.partialPivLu().solve(rhs);
    }
    return acc;
  }

 private:
  VesselGeometry geom_;
  DisplacementCondition cond_;
  ModelOptions opt_;
  HydroCoefficients base_;
  double N_r_unit_ = 0, N_v_unit_ = 0, Y_r_unit_ = 0;
  Mat3 M_;
};

inline StateRate state_derivative(const SimState& s,
                                  const GeneralizedForce& tau,
                                  const VesselModel& model) {
  StateRate d;
  d.eta_dot = kinematic_transform(s.psi()) * s.nu;
  d.nu_dot = model.body_acceleration(s.nu, tau);
  return d;
}

inline double kinetic_energy(const Vec3& nu, const Mat3& M) {
  return 0.5 * nu.dot(M * nu);
}

}  // namespace usv

#endif  // USV_MODEL_DYNAMICS_HPP_
