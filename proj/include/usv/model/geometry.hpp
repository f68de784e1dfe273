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

#ifndef USV_MODEL_GEOMETRY_HPP_
#define USV_MODEL_GEOMETRY_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "usv/core/types.hpp"

namespace usv {

// Principal dimensions of the twin hull vehicle. Lengths in m, mass in kg.
struct VesselGeometry {
  double length_overall = 4.29;
  double waterline_length = 3.21;
  double hull_separation = 1.83;  // B, centreline to centreline
  double beam_overall = 2.2;
  double hull_beam = 0.36;        // single pontoon, BWL - B
  double draft = 0.105;           // measured at `mass`
  double mass = 220.0;            // displacement at which `draft` applies
  double waterplane_area = 1.1;
  double lcg = 1.27;              // aft of bow reference, see coefficients
  std::optional<double> yaw_inertia;  // kg m^2; estimated if unset
  double water_density = 1025.0;

  void validate() const {
    require(length_overall > 0, "geometry.length_overall must be > 0");
    require(waterline_length > 0, "geometry.waterline_length must be > 0");
    require(hull_separation > 0, "geometry.hull_separation must be > 0");
    require(beam_overall >= hull_separation,
            "geometry.beam_overall must be >= hull_separation");
    require(hull_beam > 0, "geometry.hull_beam must be > 0");
    require(draft > 0, "geometry.draft must be > 0");
    require(mass > 0, "geometry.mass must be > 0");
    require(waterplane_area > 0, "geometry.waterplane_area must be > 0");
    require(lcg > 0 && lcg < length_overall,
            "geometry.lcg must lie inside (0, length_overall)");
    require(!yaw_inertia || *yaw_inertia > 0,
            "geometry.yaw_inertia must be > 0");
    require(water_density > 0, "geometry.water_density must be > 0");
  }
};

enum class ConditionLabel { kSlick, kLightship, kFull, kCustom };

inline std::string_view to_string(ConditionLabel c) {
  switch (c) {
    case ConditionLabel::kSlick: return "slick";
    case ConditionLabel::kLightship: return "lightship";
    case ConditionLabel::kFull: return "full";
    case ConditionLabel::kCustom: return "custom";
  }
  return "custom";
}

inline ConditionLabel condition_label_from_string(std::string_view s) {
  if (s == "slick") return ConditionLabel::kSlick;
  if (s == "lightship") return ConditionLabel::kLightship;
  if (s == "full") return ConditionLabel::kFull;
  if (s == "custom") return ConditionLabel::kCustom;
  throw ValidationError("unknown displacement condition '" + std::string(s) +
                        "' (expected slick, lightship, full or custom)");
}

// Loading condition with its fitted surge drag. Drag coefficients follow the
// magnitude convention: D(u) = X_u u + X_uu u|u| is the resistance, applied
// against the motion.
struct DisplacementCondition {
  ConditionLabel label = ConditionLabel::kLightship;
  double mass = 220.0;
  double X_u = 55.771;
  double X_uu = -6.9627;
  std::optional<double> draft_override;
  std::optional<double> top_speed;  // measured full throttle speed, if known

  void validate() const {
    require(mass > 0, "condition.mass must be > 0");
    require(std::isfinite(X_u) && std::isfinite(X_uu),
            "condition drag coefficients must be finite");
    require(!draft_override || *draft_override > 0,
            "condition.draft must be > 0");
  }
};

inline DisplacementCondition slick_condition() {
  return {ConditionLabel::kSlick, 150.0, 50.897, -5.8722, std::nullopt,
          std::nullopt};
}
inline DisplacementCondition lightship_condition() {
  return {ConditionLabel::kLightship, 220.0, 55.771, -6.9627, std::nullopt,
          2.8};
}
inline DisplacementCondition full_condition() {
  return {ConditionLabel::kFull, 246.0, 47.341, -2.6693, std::nullopt, 2.5};
}

inline DisplacementCondition preset_condition(ConditionLabel label) {
  switch (label) {
    case ConditionLabel::kSlick: return slick_condition();
    case ConditionLabel::kLightship: return lightship_condition();
    case ConditionLabel::kFull: return full_condition();
    case ConditionLabel::kCustom: break;
  }
  throw ValidationError("no preset for a custom condition");
}

// Parallel sided hulls: extra displacement sinks the vessel by dm/(rho A_wp).
inline double draft_for(const VesselGeometry& g,
                        const DisplacementCondition& c) {
  if (c.draft_override) return *c.draft_override;
  double t = g.draft + (c.mass - g.mass) / (g.water_density * g.waterplane_area);
  if (!(t > 0)) {
    throw ValidationError("condition mass gives a non-positive draft");
  }
  return t;
}

// Uniform rectangle over the overall footprint unless supplied.
inline double yaw_inertia_for(const VesselGeometry& g,
                              const DisplacementCondition& c) {
  if (g.yaw_inertia) return *g.yaw_inertia;
  return c.mass *
         (g.length_overall * g.length_overall +
          g.beam_overall * g.beam_overall) /
         12.0;
}

}  // namespace usv

#endif  // USV_MODEL_GEOMETRY_HPP_
