#pragma once

#include <optional>
#include <stdexcept>

#include "vantage/geom/pose.hpp"

namespace vantage::geom {

struct CameraConfig {
  int width = 128;
  int height = 128;
  double vertical_fov_deg = 90.0;
  double eye_height = 1.0;
  double max_range = 20.0;

  void validate() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("CameraConfig: nonpositive size");
    if (width != height) throw std::invalid_argument("CameraConfig: frames must be square");
    if (!(vertical_fov_deg > 0.0 && vertical_fov_deg < 180.0))
      throw std::invalid_argument("CameraConfig: vertical_fov outside (0,180)");
    if (!(max_range > 0.0)) throw std::invalid_argument("CameraConfig: max_range must be > 0");
    if (!(eye_height > 0.0)) throw std::invalid_argument("CameraConfig: eye_height must be > 0");
  }

  double tan_half_fov() const { return std::tan(deg2rad(vertical_fov_deg) * 0.5); }
};

struct ProjectedPoint {
  Vec2 pixel;    // continuous coordinates, (0,0) = top-left corner
  double depth;  // distance along the viewing axis, > 0
};

/// Projects a world point through the pinhole model. Returns the continuous
/// pixel and axis depth when the point lies in front of the camera and inside
/// the frustum (frame edges inclusive); absent otherwise.
std::optional<ProjectedPoint> project_point(const CameraConfig& cam, const Pose& pose,
                                            const Vec3& world);

/// Inverse of project_point: the world point at `depth` along the ray through
/// the continuous pixel. Pixel (i,j) of the image corresponds to (i+0.5, j+0.5).
/// Throws on nonpositive depth or a pixel outside the frame.
Vec3 backproject_pixel(const CameraConfig& cam, const Pose& pose, const Vec2& pixel,
                       double depth);

}  // namespace vantage::geom
