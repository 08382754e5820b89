#include "vantage/geom/box.hpp"

#include "vantage/geom/poly2.hpp"

namespace vantage::geom {

std::array<Vec2, 4> OrientedBox3D::footprint() const {
  return rotated_rect({center.x, center.z}, half_extents.x, half_extents.z, yaw_deg);
}

std::array<Vec3, 8> OrientedBox3D::corners() const {
  const auto fp = footprint();
  std::array<Vec3, 8> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = {fp[i].x, center.y - half_extents.y, fp[i].y};
    out[i + 4] = {fp[i].x, center.y + half_extents.y, fp[i].y};
  }
  return out;
}

bool OrientedBox3D::contains(const Vec3& p, double slack) const {
  const double y = deg2rad(yaw_deg);
  const double c = std::cos(y), s = std::sin(y);
  const double dx = p.x - center.x;
  const double dz = p.z - center.z;
  // world -> local (inverse of the footprint rotation)
  const double lx = c * dx - s * dz;
  const double lz = s * dx + c * dz;
  const double ly = p.y - center.y;
  return std::abs(lx) <= half_extents.x + slack && std::abs(ly) <= half_extents.y + slack &&
         std::abs(lz) <= half_extents.z + slack;
}

}  // namespace vantage::geom
