#include "vantage/geom/camera.hpp"

#include <algorithm>

namespace vantage::geom {

std::optional<ProjectedPoint> project_point(const CameraConfig& cam, const Pose& pose,
                                            const Vec3& world) {
  if (!finite(world)) throw std::invalid_argument("project_point: non-finite world point");
  const CameraBasis basis = camera_basis(pose);
  const Vec3 rel = world - pose.position;
  const double cx = dot(rel, basis.right);
  const double cy = dot(rel, basis.up);
  const double cz = dot(rel, basis.fwd);
  if (cz <= 0.0) return std::nullopt;

  const double t = cam.tan_half_fov();
  double u = cx / (cz * t);
  double v = -cy / (cz * t);
  // Frame edges are inside; the tolerance absorbs tan() rounding at the edge.
  constexpr double kEdgeTol = 1e-9;
  if (u < -1.0 - kEdgeTol || u > 1.0 + kEdgeTol || v < -1.0 - kEdgeTol || v > 1.0 + kEdgeTol)
    return std::nullopt;
  u = std::clamp(u, -1.0, 1.0);
  v = std::clamp(v, -1.0, 1.0);

  return ProjectedPoint{{(u + 1.0) * 0.5 * cam.width, (v + 1.0) * 0.5 * cam.height}, cz};
}

Vec3 backproject_pixel(const CameraConfig& cam, const Pose& pose, const Vec2& pixel,
                       double depth) {
  if (!(depth > 0.0)) throw std::invalid_argument("backproject_pixel: depth must be > 0");
  if (pixel.x < 0.0 || pixel.x > cam.width || pixel.y < 0.0 || pixel.y > cam.height)
    throw std::invalid_argument("backproject_pixel: pixel outside frame");

  const double t = cam.tan_half_fov();
  const double u = 2.0 * pixel.x / cam.width - 1.0;
  const double v = 2.0 * pixel.y / cam.height - 1.0;
  const CameraBasis basis = camera_basis(pose);
  // Camera-space ray (u*t, -v*t, 1): its z component is 1, so scaling by the
  // axis depth lands exactly on the observed point.
  const Vec3 dir = basis.right * (u * t) + basis.up * (-v * t) + basis.fwd;
  return pose.position + dir * depth;
}

}  // namespace vantage::geom
