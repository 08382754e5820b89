#include "vantage/geom/overlap.hpp"

#include <algorithm>

#include "vantage/geom/poly2.hpp"
#include "vantage/kernels/kernels.hpp"

namespace vantage::geom {

double iou_box2d(const Box2D& a, const Box2D& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("iou_box2d: invalid box");
  const double ix = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
  const double iy = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
  if (ix <= 0.0 || iy <= 0.0) return 0.0;
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double iou_obb3d(const OrientedBox3D& a, const OrientedBox3D& b) {
  a.validate();
  b.validate();
  const double y_lo = std::max(a.center.y - a.half_extents.y, b.center.y - b.half_extents.y);
  const double y_hi = std::min(a.center.y + a.half_extents.y, b.center.y + b.half_extents.y);
  const double dy = y_hi - y_lo;
  if (dy <= 0.0) return 0.0;

  const auto fa = a.footprint();
  const auto fb = b.footprint();
  const Poly2 clipped = clip_convex(Poly2(fa.begin(), fa.end()), Poly2(fb.begin(), fb.end()));
  const double inter_area = std::abs(polygon_area(clipped));
  if (inter_area <= 0.0) return 0.0;

  const double inter = inter_area * dy;
  const double uni = a.volume() + b.volume() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

namespace {

struct MaskCounts {
  uint64_t inter, na, nb;
};

MaskCounts count(const Mask& a, const Mask& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("mask overlap: dimension mismatch");
  MaskCounts c{};
  kernels::active_kernels().mask_counts(a.data.data(), b.data.data(), a.size(), &c.inter, &c.na,
                                        &c.nb);
  return c;
}

}  // namespace

double iou_masks(const Mask& a, const Mask& b) {
  const MaskCounts c = count(a, b);
  const uint64_t uni = c.na + c.nb - c.inter;
  return uni == 0 ? 0.0 : static_cast<double>(c.inter) / static_cast<double>(uni);
}

double dice_masks(const Mask& a, const Mask& b) {
  const MaskCounts c = count(a, b);
  const uint64_t denom = c.na + c.nb;
  return denom == 0 ? 0.0 : 2.0 * static_cast<double>(c.inter) / static_cast<double>(denom);
}

}  // namespace vantage::geom
