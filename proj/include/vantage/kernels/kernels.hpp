#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Data-parallel inner loops used by the renderer, mask metrics and the
// oriented-box fitter. Each kernel has a scalar reference implementation and
// an AVX2 variant selected at runtime; the two are equivalence-tested.
// Floating-point contraction is disabled project-wide so both paths perform
// the identical IEEE operation sequence per element.

namespace vantage::kernels {

/// One cuboid prepared for raycasting: world-frame center, half extents and
/// the yaw rotation as (cos, sin). id 0 marks structure (walls/floor).
struct RayBox {
  float cx, cy, cz;
  float hx, hy, hz;
  float cos_yaw, sin_yaw;
  int32_t id;
};

/// Camera geometry for one frame. right/up/fwd are the camera basis in world
/// space; a pixel (i, j) maps to the ray through its center (i+0.5, j+0.5).
struct RaycastFrame {
  int width;
  int height;
  float tan_half_fov;
  float eye[3];
  float right[3];
  float up[3];
  float fwd[3];
  float max_range;
};

/// Fills one image row with nearest-hit axis depth and instance id.
/// Misses get depth = max_range, id = 0.
using RaycastRowFn = void (*)(const RaycastFrame& frame, const RayBox* boxes, int n_boxes,
                              int row, float* depth_row, int32_t* id_row);

/// Counts |a & b|, |a|, |b| over byte masks holding 0/1.
using MaskCountsFn = void (*)(const uint8_t* a, const uint8_t* b, size_t n, uint64_t* n_inter,
                              uint64_t* n_a, uint64_t* n_b);

/// For each candidate yaw, rotates the ground-plane points into the candidate
/// frame and writes the axis-aligned footprint area. Angles in radians.
using ObbSweepFn = void (*)(const double* xs, const double* zs, size_t n_points,
                            const double* angles, size_t n_angles, double* out_areas);

/// Counts pixels equal to `id` in one instance-image row and accumulates the
/// sum of their column indices (for centroid computation).
using IdRowStatsFn = void (*)(const int32_t* row, int width, int32_t id, uint64_t* count,
                              uint64_t* col_sum);

struct KernelTable {
  RaycastRowFn raycast_row;
  MaskCountsFn mask_counts;
  ObbSweepFn obb_sweep;
  IdRowStatsFn id_row_stats;
  const char* name;
};

const KernelTable& scalar_kernels();
const KernelTable& avx2_kernels();  // valid only if cpu_has_avx2()

bool cpu_has_avx2();

/// Runtime-selected table. Defaults to the widest supported variant; the
/// VANTAGE_KERNELS environment variable ("scalar" | "avx2") or force_kernels()
/// overrides the choice.
const KernelTable& active_kernels();

/// Forces the active table: "scalar", "avx2" or "auto". Throws on an unknown
/// name or when AVX2 is requested on a CPU without it.
void force_kernels(const std::string& name);

}  // namespace vantage::kernels
