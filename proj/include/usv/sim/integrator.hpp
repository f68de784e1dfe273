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

#ifndef USV_SIM_INTEGRATOR_HPP_
#define USV_SIM_INTEGRATOR_HPP_

#include <sstream>
#include <type_traits>

#include "usv/core/types.hpp"
#include "usv/model/dynamics.hpp"

namespace usv {

namespace detail {

inline SimState advance(const SimState& s, const StateRate& d, double h) {
  return {s.eta + h * d.eta_dot, s.nu + h * d.nu_dot};
}

[[noreturn]] inline void non_finite(const SimState& s, double dt) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite state after RK4 step (dt=" << dt << ") from eta=("
     << s.eta.transpose() << ") nu=(" << s.nu.transpose() << ")";
  throw NumericalError(os.str());
}

}  // namespace detail

// Classical RK4. `force` maps a stage state to the generalized force, so
// speed dependent thrust and tow drag are re-evaluated at every stage.
template <typename ForceFn>
  requires(!std::is_base_of_v<Eigen::EigenBase<std::decay_t<ForceFn>>,
                              std::decay_t<ForceFn>>)
SimState integrate_step(const SimState& s, ForceFn&& force,
                        const VesselModel& model, double dt) {
  require(dt > 0, "dt must be > 0");
  auto f = [&](const SimState& x) {
    return state_derivative(x, force(x), model);
  };
  const StateRate k1 = f(s);
  const StateRate k2 = f(detail::advance(s, k1, 0.5 * dt));
  const StateRate k3 = f(detail::advance(s, k2, 0.5 * dt));
  const StateRate k4 = f(detail::advance(s, k3, dt));
  SimState out;
  out.eta = s.eta + dt / 6.0 *
                        (k1.eta_dot + 2.0 * k2.eta_dot + 2.0 * k3.eta_dot +
                         k4.eta_dot);
  out.nu = s.nu + dt / 6.0 *
                      (k1.nu_dot + 2.0 * k2.nu_dot + 2.0 * k3.nu_dot +
                       k4.nu_dot);
  if (!out.eta.allFinite() || !out.nu.allFinite()) detail::non_finite(s, dt);
  out.eta(2) = wrap_angle(out.eta(2));
  return out;
}

inline SimState integrate_step(const SimState& s, const GeneralizedForce& tau,
                               const VesselModel& model, double dt) {
  return integrate_step(
      s, [&tau](const SimState&) { return tau; }, model, dt);
}

}  // namespace usv

#endif  // USV_SIM_INTEGRATOR_HPP_
