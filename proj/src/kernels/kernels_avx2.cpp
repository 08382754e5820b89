#include "kernels_detail.hpp"
#include "vantage/kernels/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace vantage::kernels {
namespace {

// Mirrors raycast_pixel lane-for-lane: same operation order, same IEEE ops,
// so scalar and AVX2 frames compare bit-equal.
void raycast_row_avx2(const RaycastFrame& f, const RayBox* boxes, int n_boxes, int row,
                      float* depth_row, int32_t* id_row) {
  const float w = static_cast<float>(f.width);
  const float h = static_cast<float>(f.height);
  const float vj = (2.0f * (static_cast<float>(row) + 0.5f) / h - 1.0f) * f.tan_half_fov;

  const __m256 lane = _mm256_setr_ps(0.f, 1.f, 2.f, 3.f, 4.f, 5.f, 6.f, 7.f);
  const __m256 eps = _mm256_set1_ps(detail::kRayEps);

  int i = 0;
  for (; i + 8 <= f.width; i += 8) {
    const __m256 fi = _mm256_add_ps(_mm256_set1_ps(static_cast<float>(i)), lane);
    __m256 u = _mm256_div_ps(
        _mm256_mul_ps(_mm256_set1_ps(2.0f), _mm256_add_ps(fi, _mm256_set1_ps(0.5f))),
        _mm256_set1_ps(w));
    u = _mm256_mul_ps(_mm256_sub_ps(u, _mm256_set1_ps(1.0f)), _mm256_set1_ps(f.tan_half_fov));

    // dir_k = right_k*u - up_k*v + fwd_k
    const __m256 dx = _mm256_add_ps(
        _mm256_sub_ps(_mm256_mul_ps(_mm256_set1_ps(f.right[0]), u),
                      _mm256_set1_ps(f.up[0] * vj)),
        _mm256_set1_ps(f.fwd[0]));
    const __m256 dy = _mm256_add_ps(
        _mm256_sub_ps(_mm256_mul_ps(_mm256_set1_ps(f.right[1]), u),
                      _mm256_set1_ps(f.up[1] * vj)),
        _mm256_set1_ps(f.fwd[1]));
    const __m256 dz = _mm256_add_ps(
        _mm256_sub_ps(_mm256_mul_ps(_mm256_set1_ps(f.right[2]), u),
                      _mm256_set1_ps(f.up[2] * vj)),
        _mm256_set1_ps(f.fwd[2]));

    __m256 t_best = _mm256_set1_ps(f.max_range);
    __m256i id_best = _mm256_setzero_si256();

    for (int b = 0; b < n_boxes; ++b) {
      const RayBox& bx = boxes[b];
      const float ox = f.eye[0] - bx.cx;
      const float oy = f.eye[1] - bx.cy;
      const float oz = f.eye[2] - bx.cz;
      const float lox = bx.cos_yaw * ox - bx.sin_yaw * oz;
      const float loz = bx.sin_yaw * ox + bx.cos_yaw * oz;

      const __m256 ldx = _mm256_sub_ps(_mm256_mul_ps(_mm256_set1_ps(bx.cos_yaw), dx),
                                       _mm256_mul_ps(_mm256_set1_ps(bx.sin_yaw), dz));
      const __m256 ldz = _mm256_add_ps(_mm256_mul_ps(_mm256_set1_ps(bx.sin_yaw), dx),
                                       _mm256_mul_ps(_mm256_set1_ps(bx.cos_yaw), dz));

      const __m256 one = _mm256_set1_ps(1.0f);
      const __m256 ix = _mm256_div_ps(one, ldx);
      const __m256 iy = _mm256_div_ps(one, dy);
      const __m256 iz = _mm256_div_ps(one, ldz);

      const __m256 tx1 = _mm256_mul_ps(_mm256_set1_ps(-bx.hx - lox), ix);
      const __m256 tx2 = _mm256_mul_ps(_mm256_set1_ps(bx.hx - lox), ix);
      const __m256 ty1 = _mm256_mul_ps(_mm256_set1_ps(-bx.hy - oy), iy);
      const __m256 ty2 = _mm256_mul_ps(_mm256_set1_ps(bx.hy - oy), iy);
      const __m256 tz1 = _mm256_mul_ps(_mm256_set1_ps(-bx.hz - loz), iz);
      const __m256 tz2 = _mm256_mul_ps(_mm256_set1_ps(bx.hz - loz), iz);

      const __m256 tmin = _mm256_max_ps(
          _mm256_max_ps(_mm256_min_ps(tx1, tx2), _mm256_min_ps(ty1, ty2)),
          _mm256_min_ps(tz1, tz2));
      const __m256 tmax = _mm256_min_ps(
          _mm256_min_ps(_mm256_max_ps(tx1, tx2), _mm256_max_ps(ty1, ty2)),
          _mm256_max_ps(tz1, tz2));

      const __m256 hit = _mm256_and_ps(
          _mm256_and_ps(_mm256_cmp_ps(tmin, eps, _CMP_GE_OQ),
                        _mm256_cmp_ps(tmax, tmin, _CMP_GE_OQ)),
          _mm256_cmp_ps(tmin, t_best, _CMP_LT_OQ));

      t_best = _mm256_blendv_ps(t_best, tmin, hit);
      id_best = _mm256_blendv_epi8(id_best, _mm256_set1_epi32(bx.id), _mm256_castps_si256(hit));
    }

    _mm256_storeu_ps(depth_row + i, t_best);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(id_row + i), id_best);
  }
  for (; i < f.width; ++i) {
    detail::raycast_pixel(f, boxes, n_boxes, i, row, &depth_row[i], &id_row[i]);
  }
}

void mask_counts_avx2(const uint8_t* a, const uint8_t* b, size_t n, uint64_t* n_inter,
                      uint64_t* n_a, uint64_t* n_b) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc_i = zero, acc_a = zero, acc_b = zero;
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // Bytes hold 0/1, so SAD against zero sums them per 8-byte group.
    acc_i = _mm256_add_epi64(acc_i, _mm256_sad_epu8(_mm256_and_si256(va, vb), zero));
    acc_a = _mm256_add_epi64(acc_a, _mm256_sad_epu8(va, zero));
    acc_b = _mm256_add_epi64(acc_b, _mm256_sad_epu8(vb, zero));
  }
  alignas(32) uint64_t lanes[4];
  uint64_t inter = 0, ca = 0, cb = 0;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_i);
  inter = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_a);
  ca = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_b);
  cb = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    inter += static_cast<uint64_t>(a[i] & b[i]);
    ca += a[i];
    cb += b[i];
  }
  *n_inter = inter;
  *n_a = ca;
  *n_b = cb;
}

void obb_sweep_avx2(const double* xs, const double* zs, size_t n_points, const double* angles,
                    size_t n_angles, double* out_areas) {
  for (size_t a = 0; a < n_angles; ++a) {
    const double c = std::cos(angles[a]);
    const double s = std::sin(angles[a]);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    __m256d vmin_x = _mm256_set1_pd(1e300), vmax_x = _mm256_set1_pd(-1e300);
    __m256d vmin_z = _mm256_set1_pd(1e300), vmax_z = _mm256_set1_pd(-1e300);
    size_t p = 0;
    for (; p + 4 <= n_points; p += 4) {
      const __m256d px = _mm256_loadu_pd(xs + p);
      const __m256d pz = _mm256_loadu_pd(zs + p);
      const __m256d rx = _mm256_sub_pd(_mm256_mul_pd(vc, px), _mm256_mul_pd(vs, pz));
      const __m256d rz = _mm256_add_pd(_mm256_mul_pd(vs, px), _mm256_mul_pd(vc, pz));
      vmin_x = _mm256_min_pd(vmin_x, rx);
      vmax_x = _mm256_max_pd(vmax_x, rx);
      vmin_z = _mm256_min_pd(vmin_z, rz);
      vmax_z = _mm256_max_pd(vmax_z, rz);
    }
    alignas(32) double lx[4];
    double min_x = 1e300, max_x = -1e300, min_z = 1e300, max_z = -1e300;
    _mm256_store_pd(lx, vmin_x);
    for (double v : lx)
      if (v < min_x) min_x = v;
    _mm256_store_pd(lx, vmax_x);
    for (double v : lx)
      if (v > max_x) max_x = v;
    _mm256_store_pd(lx, vmin_z);
    for (double v : lx)
      if (v < min_z) min_z = v;
    _mm256_store_pd(lx, vmax_z);
    for (double v : lx)
      if (v > max_z) max_z = v;
    for (; p < n_points; ++p) {
      const double rx = c * xs[p] - s * zs[p];
      const double rz = s * xs[p] + c * zs[p];
      if (rx < min_x) min_x = rx;
      if (rx > max_x) max_x = rx;
      if (rz < min_z) min_z = rz;
      if (rz > max_z) max_z = rz;
    }
    out_areas[a] = (max_x - min_x) * (max_z - min_z);
  }
}

void id_row_stats_avx2(const int32_t* row, int width, int32_t id, uint64_t* count,
                       uint64_t* col_sum) {
  const __m256i vid = _mm256_set1_epi32(id);
  __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  __m256i acc_cnt = _mm256_setzero_si256();
  __m256i acc_sum = _mm256_setzero_si256();
  int i = 0;
  for (; i + 8 <= width; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i eq = _mm256_cmpeq_epi32(v, vid);
    acc_cnt = _mm256_sub_epi32(acc_cnt, eq);  // eq lanes are -1
    acc_sum = _mm256_add_epi32(acc_sum, _mm256_and_si256(idx, eq));
    idx = _mm256_add_epi32(idx, step);
  }
  alignas(32) int32_t lanes[8];
  uint64_t n = 0, sum = 0;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_cnt);
  for (int32_t v : lanes) n += static_cast<uint64_t>(v);
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_sum);
  for (int32_t v : lanes) sum += static_cast<uint64_t>(v);
  for (; i < width; ++i) {
    if (row[i] == id) {
      ++n;
      sum += static_cast<uint64_t>(i);
    }
  }
  *count = n;
  *col_sum = sum;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{raycast_row_avx2, mask_counts_avx2, obb_sweep_avx2,
                                 id_row_stats_avx2, "avx2"};
  return table;
}

}  // namespace vantage::kernels

#else

namespace vantage::kernels {

// Non-x86 build: the AVX2 table aliases the scalar reference.
const KernelTable& avx2_kernels() { return scalar_kernels(); }

}  // namespace vantage::kernels

#endif
