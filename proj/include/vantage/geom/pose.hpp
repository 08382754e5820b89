#pragma once

#include <stdexcept>

#include "vantage/core/math.hpp"

namespace vantage::geom {

inline constexpr double kPitchLimitDeg = 60.0;

/// Agent/camera pose. Yaw is a compass-style bearing in degrees: 0 faces +z,
/// 90 faces +x, increasing clockwise when viewed from above (+y up). Pitch is
/// positive looking up and clamped to [-60, 60].
struct Pose {
  Vec3 position;
  double yaw_deg = 0.0;
  double pitch_deg = 0.0;

  /// Returns a copy with yaw wrapped to [0,360) and pitch clamped.
  Pose normalized() const {
    Pose p = *this;
    p.yaw_deg = wrap360(yaw_deg);
    p.pitch_deg = pitch_deg < -kPitchLimitDeg ? -kPitchLimitDeg
                  : pitch_deg > kPitchLimitDeg ? kPitchLimitDeg
                                               : pitch_deg;
    return p;
  }

  void validate() const {
    if (!finite(position)) throw std::invalid_argument("Pose: non-finite position");
    if (!std::isfinite(yaw_deg) || !std::isfinite(pitch_deg))
      throw std::invalid_argument("Pose: non-finite angles");
    if (pitch_deg < -kPitchLimitDeg || pitch_deg > kPitchLimitDeg)
      throw std::invalid_argument("Pose: pitch outside [-60,60]");
  }
};

/// Orthonormal camera basis in world space. Camera x points image-right,
/// camera y image-up, camera z along the viewing axis.
struct CameraBasis {
  Vec3 right;
  Vec3 up;
  Vec3 fwd;
};

inline CameraBasis camera_basis(const Pose& pose) {
  const double y = deg2rad(pose.yaw_deg);
  const double p = deg2rad(pose.pitch_deg);
  const double cy = std::cos(y), sy = std::sin(y);
  const double cp = std::cos(p), sp = std::sin(p);
  // world_from_cam = R_yaw * R_pitch
  return CameraBasis{
      {cy, 0.0, -sy},
      {-sp * sy, cp, -sp * cy},
      {cp * sy, sp, cp * cy},
  };
}

/// Unit-free forward direction on the ground plane (pitch ignored).
inline Vec2 heading_xz(double yaw_deg) {
  const double y = deg2rad(yaw_deg);
  return {std::sin(y), std::cos(y)};
}

/// Bearing (yaw degrees) of a ground-plane direction, inverse of heading_xz.
inline double bearing_of(double dx, double dz) { return wrap360(rad2deg(std::atan2(dx, dz))); }

}  // namespace vantage::geom
