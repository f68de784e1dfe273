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

#ifndef USV_CORE_TYPES_HPP_
#define USV_CORE_TYPES_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace usv {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wraps to (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

inline double signed_square(double x) { return x * std::abs(x); }

// Bad input (config, arguments, schedule). Maps to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Blow-up or singular numerics during a run. Maps to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ValidationError(what);
}

// Earth-fixed pose eta = (x, y, psi), body velocity nu = (u, v, r).
struct SimState {
  Vec3 eta = Vec3::Zero();
  Vec3 nu = Vec3::Zero();

  double x() const { return eta(0); }
  double y() const { return eta(1); }
  double psi() const { return eta(2); }
  double u() const { return nu(0); }
  double v() const { return nu(1); }
  double r() const { return nu(2); }
};

struct StateRate {
  Vec3 eta_dot = Vec3::Zero();
  Vec3 nu_dot = Vec3::Zero();
};

// (X, Y, N) in body axes. Y is always zero for the twin jet layout but kept
// for generality of the equations.
using GeneralizedForce = Vec3;

}  // namespace usv

#endif  // USV_CORE_TYPES_HPP_
