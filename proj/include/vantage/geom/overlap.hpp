#pragma once

#include "vantage/geom/box.hpp"

namespace vantage::geom {

/// Intersection-over-union of two 2D boxes; 0 for disjoint or degenerate.
double iou_box2d(const Box2D& a, const Box2D& b);

/// Volume IoU of two gravity-aligned oriented boxes. The intersection is the
/// clipped footprint polygon area times the vertical overlap.
double iou_obb3d(const OrientedBox3D& a, const OrientedBox3D& b);

/// Mask overlap ratios. Both-empty pairs score 0 here; the evaluation layer
/// owns the target-absent exception. Throws on shape mismatch.
double iou_masks(const Mask& a, const Mask& b);
double dice_masks(const Mask& a, const Mask& b);

}  // namespace vantage::geom
