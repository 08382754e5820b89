#pragma once

#include <cmath>

#include "vantage/kernels/kernels.hpp"

// Shared between the scalar reference kernels and the SIMD tails. The scalar
// min/max mirror the SSE/AVX minps/maxps semantics (a < b ? a : b) so both
// paths propagate NaN identically and stay bit-equal.

namespace vantage::kernels::detail {

inline float minps(float a, float b) { return a < b ? a : b; }
inline float maxps(float a, float b) { return a > b ? a : b; }

inline constexpr float kRayEps = 1e-4f;

/// Nearest-hit test for a single pixel. Shared by the scalar kernel and the
/// AVX2 row tail so remainders match the reference bit-for-bit.
inline void raycast_pixel(const RaycastFrame& f, const RayBox* boxes, int n_boxes, int i, int j,
                          float* depth_out, int32_t* id_out) {
  const float u = (2.0f * (static_cast<float>(i) + 0.5f) / static_cast<float>(f.width) - 1.0f) *
                  f.tan_half_fov;
  const float v = (2.0f * (static_cast<float>(j) + 0.5f) / static_cast<float>(f.height) - 1.0f) *
                  f.tan_half_fov;
  // dir = right*u - up*v + fwd; its camera-z component is 1, so the ray
  // parameter equals depth along the viewing axis.
  const float dx = f.right[0] * u - f.up[0] * v + f.fwd[0];
  const float dy = f.right[1] * u - f.up[1] * v + f.fwd[1];
  const float dz = f.right[2] * u - f.up[2] * v + f.fwd[2];

  float t_best = f.max_range;
  int32_t id_best = 0;
  for (int b = 0; b < n_boxes; ++b) {
    const RayBox& bx = boxes[b];
    const float ox = f.eye[0] - bx.cx;
    const float oy = f.eye[1] - bx.cy;
    const float oz = f.eye[2] - bx.cz;
    // World -> box frame (inverse yaw rotation).
    const float lox = bx.cos_yaw * ox - bx.sin_yaw * oz;
    const float loz = bx.sin_yaw * ox + bx.cos_yaw * oz;
    const float ldx = bx.cos_yaw * dx - bx.sin_yaw * dz;
    const float ldz = bx.sin_yaw * dx + bx.cos_yaw * dz;

    const float ix = 1.0f / ldx;
    const float iy = 1.0f / dy;
    const float iz = 1.0f / ldz;
    const float tx1 = (-bx.hx - lox) * ix;
    const float tx2 = (bx.hx - lox) * ix;
    const float ty1 = (-bx.hy - oy) * iy;
    const float ty2 = (bx.hy - oy) * iy;
    const float tz1 = (-bx.hz - loz) * iz;
    const float tz2 = (bx.hz - loz) * iz;

    const float tmin = maxps(maxps(minps(tx1, tx2), minps(ty1, ty2)), minps(tz1, tz2));
    const float tmax = minps(minps(maxps(tx1, tx2), maxps(ty1, ty2)), maxps(tz1, tz2));

    if (tmin >= kRayEps && tmax >= tmin && tmin < t_best) {
      t_best = tmin;
      id_best = bx.id;
    }
  }
  *depth_out = t_best;
  *id_out = id_best;
}

}  // namespace vantage::kernels::detail
