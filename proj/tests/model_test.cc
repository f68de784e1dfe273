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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "usv/model/coefficients.hpp"
#include "usv/model/dynamics.hpp"
#include "usv/model/geometry.hpp"
#include "usv/sim/integrator.hpp"

namespace usv {
namespace {

constexpr double kRho = 1025.0;

std::vector<DisplacementCondition> AllConditions() {
  return {slick_condition(), lightship_condition(), full_condition()};
}

TEST(KinematicTransform, IsOrthogonalWithUnitDeterminant) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> psi(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Mat3 J = kinematic_transform(psi(rng));
    EXPECT_LT((J.transpose() * J - Mat3::Identity()).norm(), 1e-12);
    EXPECT_NEAR(J.determinant(), 1.0, 1e-12);
  }
}

TEST(KinematicTransform, RotatesSurgeIntoHeading) {
  const Vec3 d = kinematic_transform(kPi / 2) * Vec3(1.0, 0.0, 0.3);
  EXPECT_NEAR(d(0), 0.0, 1e-15);
  EXPECT_NEAR(d(1), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(d(2), 0.3);
}

TEST(Geometry, DraftFollowsDisplacedVolume) {
  VesselGeometry g;
  EXPECT_DOUBLE_EQ(draft_for(g, lightship_condition()), 0.105);
  // 26 kg more water displaced over the waterplane.
  EXPECT_NEAR(draft_for(g, full_condition()), 0.105 + 26.0 / (kRho * 1.1),
              1e-15);
  EXPECT_NEAR(draft_for(g, slick_condition()), 0.105 - 70.0 / (kRho * 1.1),
              1e-15);
  auto c = lightship_condition();
  c.draft_override = 0.2;
  EXPECT_DOUBLE_EQ(draft_for(g, c), 0.2);
}

TEST(Geometry, RejectsNonPhysicalValues) {
  VesselGeometry g;
  g.hull_separation = 0.0;
  EXPECT_THROW(g.validate(), ValidationError);
  g = VesselGeometry{};
  g.lcg = 10.0;
  EXPECT_THROW(g.validate(), ValidationError);
  auto c = lightship_condition();
  c.mass = -1;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(Geometry, YawInertiaEstimateAndOverride) {
  VesselGeometry g;
  const double expect = 220.0 * (4.29 * 4.29 + 2.2 * 2.2) / 12.0;
  EXPECT_NEAR(yaw_inertia_for(g, lightship_condition()), expect, 1e-12);
  g.yaw_inertia = 400.0;
  EXPECT_DOUBLE_EQ(yaw_inertia_for(g, lightship_condition()), 400.0);
}

TEST(Coefficients, MatchHandComputedValues) {
  VesselGeometry g;
  const auto c = lightship_condition();
  const auto k = derive_coefficients(g, c, Vec3(1.5, 0.0, 0.0));
  const double T = 0.105, L = 4.29, a = 4.29 - 1.27, b = 1.27;
  EXPECT_NEAR(k.N_vdot, 2.5 * (-kPi * kRho * T * T * (a * a + b * b) / 2),
              1e-9);
  EXPECT_NEAR(k.Y_rdot, 0.2 * (-kPi * kRho * T * T * (a * a + b * b) / 2),
              1e-9);
  EXPECT_NEAR(k.Y_vdot, 0.9 * (-kPi * kRho * T * T * L), 1e-9);
  EXPECT_NEAR(k.X_udot, -0.075 * 220.0, 1e-12);
  EXPECT_NEAR(k.N_r, 0.02 * (-kPi * kRho * 1.5 * T * T * L * L), 1e-9);
  EXPECT_NEAR(k.Y_r, 6.0 * (-kPi * kRho * 1.5 * T * T * L), 1e-9);
  EXPECT_NEAR(k.N_rr, -kRho * T * 1.1 / 4.0 * (std::pow(a, 4) + std::pow(b, 4)),
              1e-9);
  EXPECT_DOUBLE_EQ(k.X_u, 55.771);
  EXPECT_DOUBLE_EQ(k.X_uu, -6.9627);
  const double bt = 0.36 / T;
  const double br = 1.1 + 0.0045 * L / T - 0.1 * bt + 0.016 * bt * bt;
  EXPECT_NEAR(k.Y_v, 0.5 * (-40.0 * kRho * br * kPi * T * L / 2.0), 1e-6);
}

TEST(Coefficients, VelocityDependentTermsVanishAtRest) {
  const auto k =
      derive_coefficients(VesselGeometry{}, lightship_condition(), Vec3::Zero());
  EXPECT_EQ(k.N_r, 0.0);
  EXPECT_EQ(k.N_v, 0.0);
  EXPECT_EQ(k.Y_r, 0.0);
  EXPECT_LT(k.Y_v, 0.0);
}

TEST(Coefficients, TableOrderAndMarkers) {
  const auto rows = coefficient_table(VesselGeometry{}, lightship_condition(),
                                      Vec3(1, 0, 0));
  ASSERT_EQ(rows.size(), 19u);
  EXPECT_EQ(rows.front().name, "N_vdot");
  EXPECT_EQ(rows.back().name, "N_rr");
  int vd = 0;
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.value, r.factor * r.term) << r.name;
    vd += r.velocity_dependent;
  }
  EXPECT_EQ(vd, 3);
}

TEST(Coefficients, RejectNonFiniteVelocity) {
  EXPECT_THROW(derive_coefficients(VesselGeometry{}, lightship_condition(),
                                   Vec3(NAN, 0, 0)),
               ValidationError);
}

TEST(MassMatrix, SymmetricPositiveDefiniteForEveryCondition) {
  for (const auto& c : AllConditions()) {
    VesselModel m(VesselGeometry{}, c);
    const Mat3& M = m.mass();
    EXPECT_LT((M - M.transpose()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat3> es(M);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0) << to_string(c.label);
  }
}

TEST(MassMatrix, LiteralAddedMassIsNotSymmetric) {
  ModelOptions opt;
  opt.symmetric_added_mass = false;
  VesselModel m(VesselGeometry{}, lightship_condition(), opt);
  EXPECT_GT(std::abs(m.mass()(1, 2) - m.mass()(2, 1)), 1.0);
}

TEST(Coriolis, SkewSymmetricForRandomVelocities) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3), v(-1, 1), r(-1, 1);
  for (const auto& c : AllConditions()) {
    VesselModel m(VesselGeometry{}, c);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 nu(u(rng), v(rng), r(rng));
      const Mat3 C = coriolis_matrix(m.coefficients(nu), nu);
      EXPECT_LT((C + C.transpose()).cwiseAbs().maxCoeff(), 1e-9);
      // Skew means no work is done.
      EXPECT_NEAR(nu.dot(C * nu), 0.0, 1e-9);
    }
  }
}

TEST(SurgeDrag, OddContinuousAndLinearPastCap) {
  const auto c = lightship_condition();
  EXPECT_DOUBLE_EQ(surge_drag(c, 1.2), 55.771 * 1.2 - 6.9627 * 1.44);
  EXPECT_DOUBLE_EQ(surge_drag(c, -1.2), -surge_drag(c, 1.2));
  const double at_cap = surge_drag(c, 3.2);
  EXPECT_NEAR(surge_drag(c, 3.2 + 1e-9), at_cap, 1e-6);
  EXPECT_NEAR(surge_drag(c, 4.2) - at_cap, 55.771, 1e-9);
}

TEST(HullDrag, SplitSumsToSurgeDragInStraightLine) {
  const auto c = full_condition();
  const auto h = hull_drag_split(c, Vec3(2.0, 0.0, 0.0), VesselGeometry{});
  EXPECT_NEAR(h.port + h.stbd, surge_drag(c, 2.0), 1e-12);
  EXPECT_EQ(h.yaw_moment, 0.0);
}

TEST(HullDrag, YawMomentOpposesTurning) {
  VesselModel m;
  for (double r : {-0.4, -0.1, 0.1, 0.4}) {
    const Vec3 nu(1.5, 0.0, r);
    const auto h = hull_drag_split(m.condition(), nu, m.geometry());
    EXPECT_LT(h.yaw_moment * r, 0.0) << r;
  }
}

TEST(Dynamics, ForceFreeAccelerationSolvesTheEquationOfMotion) {
  VesselModel m(VesselGeometry{}, full_condition());
  const Vec3 nu(1.7, -0.2, 0.15);
  const Vec3 tau(150.0, 0.0, 12.0);
  const Vec3 a = m.body_acceleration(nu, tau);
  EXPECT_LT((m.mass() * a - (tau - m.bias_forces(nu))).norm(), 1e-9);
}

TEST(Dynamics, EnergyDecaysWithoutForcing) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.5, 2.5), v(-0.8, 0.8),
      r(-0.8, 0.8);
  for (const auto& c : AllConditions()) {
    VesselModel m(VesselGeometry{}, c);
    for (int trial = 0; trial < 20; ++trial) {
      SimState s;
      s.nu = Vec3(u(rng), v(rng), r(rng));
      double e = kinetic_energy(s.nu, m.mass());
      const double e0 = e;
      for (int i = 0; i < 2000; ++i) {
        s = integrate_step(s, Vec3::Zero(), m, 0.01);
        const double next = kinetic_energy(s.nu, m.mass());
        ASSERT_LE(next, e + 1e-12 * e0) << "trial " << trial << " step " << i;
        e = next;
      }
      EXPECT_LT(e, 0.5 * e0);
    }
  }
}

TEST(Dynamics, ZeroStateIsAnEquilibrium) {
  VesselModel m;
  EXPECT_EQ(m.body_acceleration(Vec3::Zero(), Vec3::Zero()).norm(), 0.0);
}

TEST(Dynamics, SwitchingAddedMassOnlyWhenDecelerating) {
  ModelOptions opt;
  opt.switching_added_mass = true;
  VesselModel sw(VesselGeometry{}, lightship_condition(), opt);
  VesselModel plain;
  const Vec3 nu(2.0, 0, 0);
  // Accelerating: identical.
  EXPECT_NEAR(sw.body_acceleration(nu, Vec3(300, 0, 0))(0),
              plain.body_acceleration(nu, Vec3(300, 0, 0))(0), 1e-12);
  // Coasting: heavier effective mass, slower deceleration.
  const double a_sw = sw.body_acceleration(nu, Vec3::Zero())(0);
  const double a_pl = plain.body_acceleration(nu, Vec3::Zero())(0);
  EXPECT_LT(a_pl, a_sw);
  EXPECT_LT(a_sw, 0.0);
}

TEST(ModelOptions, Validate) {
  ModelOptions o;
  o.hull_velocity_sign = 0.5;
  EXPECT_THROW(o.validate(), ValidationError);
  o = ModelOptions{};
  o.drag_cap_speed = 0;
  EXPECT_THROW(o.validate(), ValidationError);
}

}  // namespace
}  // namespace usv
