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

#ifndef USV_ANALYSIS_FIT_HPP_
#define USV_ANALYSIS_FIT_HPP_

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "usv/core/types.hpp"

namespace usv {

struct DragPoint {
  double u;  // m/s
  double D;  // N
};

struct DragFit {
  double X_uu = 0;
  double X_u = 0;
  double residual_rms = 0;
  size_t samples = 0;
};

namespace detail {

// Ordinary least squares with an explicit rank check.
inline Eigen::VectorXd least_squares(const Eigen::MatrixXd& A,
                                     const Eigen::VectorXd& y,
                                     const char* what) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < A.cols()) {
    throw ValidationError(std::string(what) +
                          ": design matrix is rank deficient (need samples "
                          "at distinct speeds)");
  }
  return qr.solve(y);
}

}  // namespace detail

// D = X_uu u|u| + X_u u, no constant.
inline DragFit fit_drag_quadratic(const std::vector<DragPoint>& pts) {
  require(pts.size() >= 3, "drag fit needs at least 3 points");
  std::set<double> speeds;
  for (const auto& p : pts) {
    require(std::isfinite(p.u) && std::isfinite(p.D),
            "drag fit points must be finite");
    speeds.insert(p.u);
  }
  require(speeds.size() >= 2,
          "drag fit: design matrix is rank deficient (need samples at "
          "distinct speeds)");
  const long n = static_cast<long>(pts.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd y(n);
  for (long i = 0; i < n; ++i) {
    const double u = pts[static_cast<size_t>(i)].u;
    A(i, 0) = u * std::abs(u);
    A(i, 1) = u;
    y(i) = pts[static_cast<size_t>(i)].D;
  }
  const Eigen::VectorXd c = detail::least_squares(A, y, "drag fit");
  DragFit f;
  f.X_uu = c(0);
  f.X_u = c(1);
  f.samples = pts.size();
  f.residual_rms = std::sqrt((A * c - y).squaredNorm() / static_cast<double>(n));
  return f;
}

struct TowFit {
  double c_t = 0;  // N/(m/s)^2
  double residual_rms = 0;
  size_t samples = 0;
  double valid_min = 0.5, valid_max = 1.6;
  std::vector<size_t> out_of_range;  // indices outside the validity range
};

// D_tow = c_t u^2.
inline TowFit fit_tow_drag(const std::vector<DragPoint>& pts,
                           double valid_min = 0.5, double valid_max = 1.6) {
  require(!pts.empty(), "tow fit needs at least one point");
  TowFit f;
  f.valid_min = valid_min;
  f.valid_max = valid_max;
  double num = 0, den = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const double u2 = pts[i].u * pts[i].u;
    num += pts[i].D * u2;
    den += u2 * u2;
    if (pts[i].u < valid_min || pts[i].u > valid_max) {
      f.out_of_range.push_back(i);
    }
  }
  require(den > 0, "tow fit needs a nonzero speed");
  f.c_t = num / den;
  double ss = 0;
  for (const auto& p : pts) {
    const double e = f.c_t * p.u * p.u - p.D;
    ss += e * e;
  }
  f.samples = pts.size();
  f.residual_rms = std::sqrt(ss / static_cast<double>(pts.size()));
  return f;
}

struct ThrustPoint {
  double u;    // m/s
  double cmd;  // fraction
  double T;    // N, one jet
};

struct ThrustFit {
  double a1 = 0;  // N/(m/s)
  double a2 = 0;  // N
  double residual_rms = 0;
  size_t samples = 0;
};

// T = a2 n^2 + a1 u n for one jet.
inline ThrustFit fit_thrust_model(const std::vector<ThrustPoint>& pts) {
  require(pts.size() >= 2, "thrust fit needs at least 2 points");
  const long n = static_cast<long>(pts.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd y(n);
  for (long i = 0; i < n; ++i) {
    const auto& p = pts[static_cast<size_t>(i)];
    A(i, 0) = p.cmd * p.cmd;
    A(i, 1) = p.u * p.cmd;
    y(i) = p.T;
  }
  const Eigen::VectorXd c = detail::least_squares(A, y, "thrust fit");
  ThrustFit f;
  f.a2 = c(0);
  f.a1 = c(1);
  f.samples = pts.size();
  f.residual_rms = std::sqrt((A * c - y).squaredNorm() / static_cast<double>(n));
  return f;
}

}  // namespace usv

#endif  // USV_ANALYSIS_FIT_HPP_
