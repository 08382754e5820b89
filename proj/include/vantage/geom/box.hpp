#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vantage/core/math.hpp"

namespace vantage::geom {

/// Axis-aligned 2D box in continuous pixel coordinates.
struct Box2D {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  Vec2 center() const { return {(xmin + xmax) * 0.5, (ymin + ymax) * 0.5}; }
  bool valid() const { return xmin <= xmax && ymin <= ymax; }

  Box2D clipped(double w, double h) const {
    Box2D b{std::max(xmin, 0.0), std::max(ymin, 0.0), std::min(xmax, w), std::min(ymax, h)};
    if (!b.valid()) b = Box2D{0, 0, 0, 0};
    return b;
  }
};

/// Gravity-aligned oriented box: yaw rotates about the up axis only, stored
/// in [0,180) since the box is symmetric under a half turn.
struct OrientedBox3D {
  Vec3 center;
  Vec3 half_extents;
  double yaw_deg = 0.0;

  void validate() const {
    if (!finite(center) || !finite(half_extents))
      throw std::invalid_argument("OrientedBox3D: non-finite fields");
    if (!(half_extents.x > 0.0 && half_extents.y > 0.0 && half_extents.z > 0.0))
      throw std::invalid_argument("OrientedBox3D: half extents must be positive");
    if (!(yaw_deg >= 0.0 && yaw_deg < 180.0))
      throw std::invalid_argument("OrientedBox3D: yaw outside [0,180)");
  }

  double volume() const { return 8.0 * half_extents.x * half_extents.y * half_extents.z; }

  /// Ground-plane footprint corners (x,z), counter-clockwise.
  std::array<Vec2, 4> footprint() const;

  /// All eight corners in world space.
  std::array<Vec3, 8> corners() const;

  bool contains(const Vec3& p, double slack = 0.0) const;
};

inline double normalize_box_yaw(double yaw_deg) {
  double y = wrap360(yaw_deg);
  if (y >= 180.0) y -= 180.0;
  return y;
}

/// Dense binary mask, one byte per pixel holding 0 or 1.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  Mask() = default;
  Mask(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, 0) {}

  uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  void set(int x, int y, uint8_t v) { data[static_cast<size_t>(y) * width + x] = v; }
  size_t size() const { return data.size(); }
  bool same_shape(const Mask& o) const { return width == o.width && height == o.height; }
};

}  // namespace vantage::geom
