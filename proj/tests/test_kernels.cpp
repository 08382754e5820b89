#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "vantage/core/rng.hpp"
#include "vantage/kernels/kernels.hpp"

using namespace vantage;
using namespace vantage::kernels;

namespace {

RaycastFrame random_frame(Rng& rng, int size) {
  RaycastFrame f{};
  f.width = size;
  f.height = size;
  f.tan_half_fov = 1.0f;
  f.max_range = 20.0f;
  const double yaw = rng.uniform(0, 2 * 3.14159265358979);
  const double c = std::cos(yaw), s = std::sin(yaw);
  f.eye[0] = static_cast<float>(rng.uniform(-2, 2));
  f.eye[1] = 1.0f;
  f.eye[2] = static_cast<float>(rng.uniform(-2, 2));
  f.right[0] = static_cast<float>(c);
  f.right[1] = 0.0f;
  f.right[2] = static_cast<float>(-s);
  f.up[0] = 0.0f;
  f.up[1] = 1.0f;
  f.up[2] = 0.0f;
  f.fwd[0] = static_cast<float>(s);
  f.fwd[1] = 0.0f;
  f.fwd[2] = static_cast<float>(c);
  return f;
}

std::vector<RayBox> random_boxes(Rng& rng, int n) {
  std::vector<RayBox> boxes;
  for (int i = 0; i < n; ++i) {
    const double yaw = rng.uniform(0, 3.14159265358979);
    boxes.push_back(RayBox{static_cast<float>(rng.uniform(-6, 6)),
                           static_cast<float>(rng.uniform(0, 2)),
                           static_cast<float>(rng.uniform(-6, 6)),
                           static_cast<float>(rng.uniform(0.1, 1.5)),
                           static_cast<float>(rng.uniform(0.1, 1.5)),
                           static_cast<float>(rng.uniform(0.1, 1.5)),
                           static_cast<float>(std::cos(yaw)), static_cast<float>(std::sin(yaw)),
                           i + 1});
  }
  return boxes;
}

}  // namespace

TEST_CASE("dispatch selection and overrides") {
  CHECK(std::string(scalar_kernels().name) == "scalar");
  force_kernels("scalar");
  CHECK(std::string(active_kernels().name) == "scalar");
  if (cpu_has_avx2()) {
    force_kernels("avx2");
    CHECK(std::string(active_kernels().name) == "avx2");
  }
  force_kernels("auto");
  CHECK_THROWS(force_kernels("sse9"));
}

TEST_CASE("raycast rows: AVX2 matches scalar bit-for-bit") {
  if (!cpu_has_avx2()) return;
  Rng rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    const int size = (trial % 2 == 0) ? 64 : 53;  // odd width exercises the tail
    const RaycastFrame f = random_frame(rng, size);
    const auto boxes = random_boxes(rng, 12);
    std::vector<float> d_s(size), d_v(size);
    std::vector<int32_t> i_s(size), i_v(size);
    for (int row = 0; row < size; ++row) {
      scalar_kernels().raycast_row(f, boxes.data(), static_cast<int>(boxes.size()), row,
                                   d_s.data(), i_s.data());
      avx2_kernels().raycast_row(f, boxes.data(), static_cast<int>(boxes.size()), row, d_v.data(),
                                 i_v.data());
      CHECK(std::memcmp(d_s.data(), d_v.data(), size * sizeof(float)) == 0);
      CHECK(std::memcmp(i_s.data(), i_v.data(), size * sizeof(int32_t)) == 0);
    }
  }
}

TEST_CASE("mask counts: AVX2 matches scalar exactly") {
  if (!cpu_has_avx2()) return;
  Rng rng(7);
  for (size_t n : {0UL, 1UL, 31UL, 32UL, 1000UL, 4097UL}) {
    std::vector<uint8_t> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = rng.bernoulli(0.4);
      b[i] = rng.bernoulli(0.4);
    }
    uint64_t si, sa, sb, vi, va, vb;
    scalar_kernels().mask_counts(a.data(), b.data(), n, &si, &sa, &sb);
    avx2_kernels().mask_counts(a.data(), b.data(), n, &vi, &va, &vb);
    CHECK(si == vi);
    CHECK(sa == va);
    CHECK(sb == vb);
  }
}

TEST_CASE("obb sweep: AVX2 areas equal scalar areas") {
  if (!cpu_has_avx2()) return;
  Rng rng(99);
  for (size_t n : {3UL, 17UL, 256UL}) {
    std::vector<double> xs(n), zs(n);
    for (size_t i = 0; i < n; ++i) {
      xs[i] = rng.uniform(-3, 3);
      zs[i] = rng.uniform(-3, 3);
    }
    std::vector<double> angles;
    for (int k = 0; k < 180; ++k) angles.push_back(k * 0.5 * 3.14159265358979 / 180.0);
    std::vector<double> a_s(angles.size()), a_v(angles.size());
    scalar_kernels().obb_sweep(xs.data(), zs.data(), n, angles.data(), angles.size(), a_s.data());
    avx2_kernels().obb_sweep(xs.data(), zs.data(), n, angles.data(), angles.size(), a_v.data());
    for (size_t i = 0; i < angles.size(); ++i) CHECK(a_s[i] == a_v[i]);
  }
}

TEST_CASE("instance-id row stats: AVX2 matches scalar exactly") {
  if (!cpu_has_avx2()) return;
  Rng rng(3);
  for (int width : {7, 64, 129}) {
    std::vector<int32_t> row(width);
    for (int i = 0; i < width; ++i) row[i] = rng.uniform_int(0, 4);
    for (int32_t id = 0; id <= 4; ++id) {
      uint64_t cs, ss, cv, sv;
      scalar_kernels().id_row_stats(row.data(), width, id, &cs, &ss);
      avx2_kernels().id_row_stats(row.data(), width, id, &cv, &sv);
      CHECK(cs == cv);
      CHECK(ss == sv);
    }
  }
}
