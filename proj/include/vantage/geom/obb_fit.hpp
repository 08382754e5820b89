#pragma once

#include <span>
#include <vector>

#include "vantage/geom/box.hpp"

namespace vantage::geom {

struct ObbFitResult {
  OrientedBox3D box;
  bool degenerate = false;  // collinear ground projection, half-extent floored
  double footprint_area = 0.0;
};

inline constexpr double kObbDefaultAngleStepDeg = 0.5;
inline constexpr double kObbHalfExtentFloor = 1e-3;

/// Minimum-area footprint search: sweeps yaw over [0,90) at `angle_step_deg`
/// resolution, picks the yaw whose ground-plane axis-aligned footprint of the
/// points is smallest, and takes the vertical extent from the up-coordinate
/// range. Requires >= 3 points and angle_step in (0,90].
ObbFitResult fit_min_area_obb(std::span<const Vec3> points,
                              double angle_step_deg = kObbDefaultAngleStepDeg);

}  // namespace vantage::geom
