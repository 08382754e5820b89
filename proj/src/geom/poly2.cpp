#include "vantage/geom/poly2.hpp"

#include <algorithm>

namespace vantage::geom {

double polygon_area(const Poly2& poly) {
  const size_t n = poly.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc * 0.5;
}

Poly2 clip_convex(const Poly2& subject, const Poly2& clip) {
  Poly2 out = subject;
  const size_t nc = clip.size();
  for (size_t e = 0; e < nc && !out.empty(); ++e) {
    const Vec2 a = clip[e];
    const Vec2 b = clip[(e + 1) % nc];
    // Inside = left of directed edge a->b for a CCW clip polygon.
    auto side = [&](const Vec2& p) {
      return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    };
    Poly2 in;
    in.swap(out);
    const size_t ni = in.size();
    for (size_t i = 0; i < ni; ++i) {
      const Vec2 cur = in[i];
      const Vec2 nxt = in[(i + 1) % ni];
      const double sc = side(cur);
      const double sn = side(nxt);
      if (sc >= 0.0) out.push_back(cur);
      if ((sc >= 0.0) != (sn >= 0.0)) {
        const double t = sc / (sc - sn);
        out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    }
  }
  return out;
}

Poly2 convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  Poly2 hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool convex_overlap(const Poly2& a, const Poly2& b) {
  auto separated_by_edges_of = [](const Poly2& edges, const Poly2& p, const Poly2& q) {
    const size_t n = edges.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2 e{edges[(i + 1) % n].x - edges[i].x, edges[(i + 1) % n].y - edges[i].y};
      const Vec2 axis{-e.y, e.x};
      double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
      for (const Vec2& v : p) {
        const double d = v.x * axis.x + v.y * axis.y;
        pmin = std::min(pmin, d);
        pmax = std::max(pmax, d);
      }
      for (const Vec2& v : q) {
        const double d = v.x * axis.x + v.y * axis.y;
        qmin = std::min(qmin, d);
        qmax = std::max(qmax, d);
      }
      if (pmax < qmin || qmax < pmin) return true;
    }
    return false;
  };
  if (a.empty() || b.empty()) return false;
  return !separated_by_edges_of(a, a, b) && !separated_by_edges_of(b, a, b);
}

std::array<Vec2, 4> rotated_rect(Vec2 center, double half_a, double half_b, double yaw_deg) {
  const double y = deg2rad(yaw_deg);
  const double c = std::cos(y), s = std::sin(y);
  // local -> world: x' = c*x + s*z, z' = -s*x + c*z (compass yaw about +up)
  auto rot = [&](double lx, double lz) {
    return Vec2{center.x + c * lx + s * lz, center.y + (-s * lx + c * lz)};
  };
  return {rot(half_a, half_b), rot(-half_a, half_b), rot(-half_a, -half_b), rot(half_a, -half_b)};
}

}  // namespace vantage::geom
