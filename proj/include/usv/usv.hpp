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

#ifndef USV_USV_HPP_
#define USV_USV_HPP_

#include "usv/analysis/compare.hpp"
#include "usv/analysis/fit.hpp"
#include "usv/analysis/steady_state.hpp"
#include "usv/control/adaptive.hpp"
#include "usv/control/backstepping.hpp"
#include "usv/core/types.hpp"
#include "usv/io/config.hpp"
#include "usv/io/csv.hpp"
#include "usv/io/format.hpp"
#include "usv/model/coefficients.hpp"
#include "usv/model/dynamics.hpp"
#include "usv/model/geometry.hpp"
#include "usv/propulsion/thruster.hpp"
#include "usv/sim/integrator.hpp"
#include "usv/sim/runner.hpp"
#include "usv/sim/scenario.hpp"

#endif  // USV_USV_HPP_
