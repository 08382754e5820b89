#include "kernels_detail.hpp"
#include "vantage/kernels/kernels.hpp"

namespace vantage::kernels {
namespace {

void raycast_row_scalar(const RaycastFrame& f, const RayBox* boxes, int n_boxes, int row,
                        float* depth_row, int32_t* id_row) {
  for (int i = 0; i < f.width; ++i) {
    detail::raycast_pixel(f, boxes, n_boxes, i, row, &depth_row[i], &id_row[i]);
  }
}

void mask_counts_scalar(const uint8_t* a, const uint8_t* b, size_t n, uint64_t* n_inter,
                        uint64_t* n_a, uint64_t* n_b) {
  uint64_t inter = 0, ca = 0, cb = 0;
  for (size_t i = 0; i < n; ++i) {
    inter += static_cast<uint64_t>(a[i] & b[i]);
    ca += a[i];
    cb += b[i];
  }
  *n_inter = inter;
  *n_a = ca;
  *n_b = cb;
}

void obb_sweep_scalar(const double* xs, const double* zs, size_t n_points, const double* angles,
                      size_t n_angles, double* out_areas) {
  for (size_t a = 0; a < n_angles; ++a) {
    const double c = std::cos(angles[a]);
    const double s = std::sin(angles[a]);
    double min_x = 1e300, max_x = -1e300;
    double min_z = 1e300, max_z = -1e300;
    for (size_t p = 0; p < n_points; ++p) {
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

void id_row_stats_scalar(const int32_t* row, int width, int32_t id, uint64_t* count,
                         uint64_t* col_sum) {
  uint64_t n = 0, sum = 0;
  for (int i = 0; i < width; ++i) {
    if (row[i] == id) {
      ++n;
      sum += static_cast<uint64_t>(i);
    }
  }
  *count = n;
  *col_sum = sum;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{raycast_row_scalar, mask_counts_scalar, obb_sweep_scalar,
                                 id_row_stats_scalar, "scalar"};
  return table;
}

}  // namespace vantage::kernels
