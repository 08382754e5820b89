#pragma once

#include <array>
#include <vector>

#include "vantage/core/math.hpp"

// Small 2D convex-polygon toolbox shared by the overlap measures, the scene
// generator's footprint checks and the projected-box reward snapshot.

namespace vantage::geom {

using Poly2 = std::vector<Vec2>;

/// Shoelace area; vertices in order (sign follows winding).
double polygon_area(const Poly2& poly);

/// Sutherland-Hodgman clip of a convex polygon against another convex polygon
/// given counter-clockwise. Returns the (possibly empty) intersection.
Poly2 clip_convex(const Poly2& subject, const Poly2& clip);

/// Convex hull (Andrew monotone chain), counter-clockwise, no duplicates.
Poly2 convex_hull(std::vector<Vec2> points);

/// Separating-axis test for two convex polygons; touching counts as overlap.
bool convex_overlap(const Poly2& a, const Poly2& b);

/// Counter-clockwise rectangle from center, half sizes and yaw (degrees,
/// compass convention on the ground plane: x east, z north -> here x,y axes).
std::array<Vec2, 4> rotated_rect(Vec2 center, double half_a, double half_b, double yaw_deg);

}  // namespace vantage::geom
