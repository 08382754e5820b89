#include "vantage/geom/obb_fit.hpp"

#include <algorithm>
#include <limits>

#include "vantage/kernels/kernels.hpp"

namespace vantage::geom {

ObbFitResult fit_min_area_obb(std::span<const Vec3> points, double angle_step_deg) {
  if (points.size() < 3) throw std::invalid_argument("fit_min_area_obb: need at least 3 points");
  if (!(angle_step_deg > 0.0 && angle_step_deg <= 90.0))
    throw std::invalid_argument("fit_min_area_obb: angle_step outside (0,90]");

  const size_t n = points.size();
  std::vector<double> xs(n), zs(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = points[i].x;
    zs[i] = points[i].z;
  }

  std::vector<double> angles;
  for (double a = 0.0; a < 90.0 - 1e-12; a += angle_step_deg) angles.push_back(deg2rad(a));

  std::vector<double> areas(angles.size());
  kernels::active_kernels().obb_sweep(xs.data(), zs.data(), n, angles.data(), angles.size(),
                                      areas.data());

  size_t best = 0;
  for (size_t i = 1; i < areas.size(); ++i) {
    if (areas[i] < areas[best]) best = i;
  }

  const double c = std::cos(angles[best]);
  const double s = std::sin(angles[best]);
  double min_x = std::numeric_limits<double>::max(), max_x = -min_x;
  double min_z = min_x, max_z = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (size_t i = 0; i < n; ++i) {
    const double rx = c * xs[i] - s * zs[i];
    const double rz = s * xs[i] + c * zs[i];
    min_x = std::min(min_x, rx);
    max_x = std::max(max_x, rx);
    min_z = std::min(min_z, rz);
    max_z = std::max(max_z, rz);
    min_y = std::min(min_y, points[i].y);
    max_y = std::max(max_y, points[i].y);
  }

  ObbFitResult res;
  double hx = (max_x - min_x) * 0.5;
  double hy = (max_y - min_y) * 0.5;
  double hz = (max_z - min_z) * 0.5;
  if (hx < kObbHalfExtentFloor) {
    hx = kObbHalfExtentFloor;
    res.degenerate = true;
  }
  if (hy < kObbHalfExtentFloor) {
    hy = kObbHalfExtentFloor;
    res.degenerate = true;
  }
  if (hz < kObbHalfExtentFloor) {
    hz = kObbHalfExtentFloor;
    res.degenerate = true;
  }

  const double mid_x = (min_x + max_x) * 0.5;
  const double mid_z = (min_z + max_z) * 0.5;
  // local -> world (inverse of the sweep rotation)
  res.box.center = {c * mid_x + s * mid_z, (min_y + max_y) * 0.5, -s * mid_x + c * mid_z};
  res.box.half_extents = {hx, hy, hz};
  res.box.yaw_deg = normalize_box_yaw(rad2deg(angles[best]));
  res.footprint_area = 4.0 * hx * hz;
  return res;
}

}  // namespace vantage::geom
