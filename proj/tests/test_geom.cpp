#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "vantage/core/rng.hpp"
#include "vantage/geom/camera.hpp"
#include "vantage/geom/obb_fit.hpp"
#include "vantage/geom/overlap.hpp"

using namespace vantage;
using namespace vantage::geom;

namespace {

// Test-local reference projector: pure trig for an identity pose, no shared
// code with the matrix path under test.
std::optional<Vec2> reference_project_identity(const CameraConfig& cam, const Vec3& p) {
  if (p.z <= 0.0) return std::nullopt;
  const double t = std::tan(deg2rad(cam.vertical_fov_deg) / 2.0);
  const double u = (p.x / p.z) / t;
  const double v = -((p.y - 0.0) / p.z) / t;
  if (std::abs(u) > 1.0 || std::abs(v) > 1.0) return std::nullopt;
  return Vec2{(u + 1.0) * 0.5 * cam.width, (v + 1.0) * 0.5 * cam.height};
}

// Brute-force footprint sweep used as the fitting oracle.
double brute_force_min_area(const std::vector<Vec3>& pts, double step_deg) {
  double best = 1e300;
  for (double a = 0.0; a < 90.0 - 1e-12; a += step_deg) {
    const double c = std::cos(deg2rad(a)), s = std::sin(deg2rad(a));
    double mnx = 1e300, mxx = -1e300, mnz = 1e300, mxz = -1e300;
    for (const Vec3& p : pts) {
      const double rx = c * p.x - s * p.z;
      const double rz = s * p.x + c * p.z;
      mnx = std::min(mnx, rx);
      mxx = std::max(mxx, rx);
      mnz = std::min(mnz, rz);
      mxz = std::max(mxz, rz);
    }
    best = std::min(best, (mxx - mnx) * (mxz - mnz));
  }
  return best;
}

// Oracle-local point-in-box with its own rotation math.
bool oracle_inside(const OrientedBox3D& b, const Vec3& p) {
  const double y = deg2rad(b.yaw_deg);
  const double dx = p.x - b.center.x, dz = p.z - b.center.z;
  const double lx = std::cos(y) * dx - std::sin(y) * dz;
  const double lz = std::sin(y) * dx + std::cos(y) * dz;
  return std::abs(lx) <= b.half_extents.x && std::abs(p.y - b.center.y) <= b.half_extents.y &&
         std::abs(lz) <= b.half_extents.z;
}

double monte_carlo_iou(const OrientedBox3D& a, const OrientedBox3D& b, int n, uint64_t seed) {
  // Shared AABB of both boxes.
  double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
  for (const auto& bx : {a, b}) {
    for (const Vec3& c : bx.corners()) {
      lo[0] = std::min(lo[0], c.x);
      lo[1] = std::min(lo[1], c.y);
      lo[2] = std::min(lo[2], c.z);
      hi[0] = std::max(hi[0], c.x);
      hi[1] = std::max(hi[1], c.y);
      hi[2] = std::max(hi[2], c.z);
    }
  }
  Rng rng(seed);
  long in_both = 0, in_either = 0;
  for (int i = 0; i < n; ++i) {
    const Vec3 p{rng.uniform(lo[0], hi[0]), rng.uniform(lo[1], hi[1]), rng.uniform(lo[2], hi[2])};
    const bool ia = oracle_inside(a, p);
    const bool ib = oracle_inside(b, p);
    in_both += (ia && ib);
    in_either += (ia || ib);
  }
  return in_either == 0 ? 0.0 : static_cast<double>(in_both) / in_either;
}

OrientedBox3D random_box(Rng& rng) {
  OrientedBox3D b;
  b.center = {rng.uniform(-2, 2), rng.uniform(-1, 1), rng.uniform(-2, 2)};
  b.half_extents = {rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5)};
  b.yaw_deg = rng.uniform(0, 180);
  return b;
}

}  // namespace

TEST_CASE("pose normalization and validation") {
  Pose p{{0, 1, 0}, 725.0, 80.0};
  const Pose n = p.normalized();
  CHECK(n.yaw_deg == doctest::Approx(5.0));
  CHECK(n.pitch_deg == doctest::Approx(60.0));
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_NOTHROW(n.validate());
  CHECK(wrap180(350.0) == doctest::Approx(-10.0));
}

TEST_CASE("camera config invariants") {
  CameraConfig cam;
  CHECK_NOTHROW(cam.validate());
  cam.width = 64;
  CHECK_THROWS(cam.validate());
  cam.width = cam.height;
  cam.vertical_fov_deg = 180.0;
  CHECK_THROWS(cam.validate());
}

TEST_CASE("project_point: on-axis point maps to image center") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  const Pose pose{{0, 1, 0}, 0, 0};
  const auto hit = project_point(cam, pose, {0, 1, 2});
  REQUIRE(hit.has_value());
  CHECK(hit->pixel.x == doctest::Approx(64.0));
  CHECK(hit->pixel.y == doctest::Approx(64.0));
  CHECK(hit->depth == doctest::Approx(2.0));
}

TEST_CASE("project_point: behind camera is absent") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  CHECK_FALSE(project_point(cam, Pose{{0, 1, 0}, 0, 0}, {0, 1, -2}).has_value());
}

TEST_CASE("project_point: 2m ahead 2m left lands on the left frame edge") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  const auto hit = project_point(cam, Pose{{0, 1, 0}, 0, 0}, {-2, 1, 2});
  REQUIRE(hit.has_value());
  CHECK(hit->pixel.x == doctest::Approx(0.0));
  CHECK(hit->pixel.y == doctest::Approx(64.0));
  CHECK(hit->depth == doctest::Approx(2.0));
}

TEST_CASE("project_point agrees with the trig reference projector") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  const Pose pose{{0, 0, 0}, 0, 0};
  Rng rng(41);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Vec3 p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const auto got = project_point(cam, pose, p);
    const auto want = reference_project_identity(cam, p);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->pixel.x == doctest::Approx(want->x).epsilon(1e-9));
      CHECK(got->pixel.y == doctest::Approx(want->y).epsilon(1e-9));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("backproject inverts project for 1000 random in-frustum points") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  Rng rng(7);
  int done = 0;
  while (done < 1000) {
    const Pose pose =
        Pose{{rng.uniform(-3, 3), 1.0, rng.uniform(-3, 3)}, rng.uniform(0, 360), rng.uniform(-60, 60)}
            .normalized();
    const Vec3 p{rng.uniform(-6, 6), rng.uniform(-2, 4), rng.uniform(-6, 6)};
    const auto hit = project_point(cam, pose, p);
    if (!hit) continue;
    const Vec3 back = backproject_pixel(cam, pose, hit->pixel, hit->depth);
    CHECK(norm(back - p) < 1e-6);
    ++done;
  }
}

TEST_CASE("backproject: center pixel goes straight down the viewing axis") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  const Pose pose{{1, 1, -2}, 90.0, 0};
  const Vec3 p = backproject_pixel(cam, pose, {64, 64}, 3.0);
  CHECK(norm(p - Vec3{4, 1, -2}) < 1e-12);  // yaw 90 faces +x
}

TEST_CASE("backproject: corner pixel offsets follow the pixel-center convention") {
  CameraConfig cam{128, 128, 90.0, 1.0, 20.0};
  const Pose pose{{0, 0, 0}, 0, 0};
  // Integer pixel (0,0) samples the ray through continuous (0.5, 0.5).
  const Vec3 p = backproject_pixel(cam, pose, {0.5, 0.5}, 1.0);
  const double expect = 1.0 - 1.0 / 128.0;
  CHECK(p.x == doctest::Approx(-expect).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(expect).epsilon(1e-12));
  CHECK(p.z == doctest::Approx(1.0));
  CHECK_THROWS_AS(backproject_pixel(cam, pose, {64, 64}, 0.0), std::invalid_argument);
}

TEST_CASE("fit_min_area_obb: axis-aligned square is already optimal") {
  const std::vector<Vec3> pts{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {0.5, 1, 0.5}};
  const auto fit = fit_min_area_obb(pts, 0.5);
  CHECK(fit.box.yaw_deg == doctest::Approx(0.0));
  CHECK(fit.footprint_area == doctest::Approx(1.0));
  CHECK_FALSE(fit.degenerate);
}

TEST_CASE("fit_min_area_obb: rotated unit square recovered within angle step") {
  const std::vector<Vec3> pts{
      {0, 0, 0}, {0.7071, 0, 0.7071}, {1.4142, 0, 0}, {0.7071, 0, -0.7071}, {0.7071, 0.5, 0}};
  const auto fit = fit_min_area_obb(pts, 0.5);
  CHECK(std::abs(fit.box.yaw_deg - 45.0) <= 0.5 + 1e-9);
  CHECK(fit.footprint_area == doctest::Approx(1.0).epsilon(2e-3));
  // Same-grid brute force can only tie or beat by the containment slack.
  const double oracle = brute_force_min_area(pts, 0.01);
  CHECK(fit.footprint_area <= oracle * 1.02 + 1e-6);
  for (const Vec3& p : pts) CHECK(fit.box.contains(p, 1e-9));
}

TEST_CASE("fit_min_area_obb: recovers a known box from uniform samples") {
  Rng rng(99);
  OrientedBox3D truth;
  truth.center = {1.0, 0.5, -2.0};
  truth.half_extents = {0.8, 0.5, 0.4};
  truth.yaw_deg = 27.0;
  const double y = deg2rad(truth.yaw_deg);
  std::vector<Vec3> pts;
  for (int i = 0; i < 10000; ++i) {
    const double lx = rng.uniform(-truth.half_extents.x, truth.half_extents.x);
    const double ly = rng.uniform(-truth.half_extents.y, truth.half_extents.y);
    const double lz = rng.uniform(-truth.half_extents.z, truth.half_extents.z);
    pts.push_back({truth.center.x + std::cos(y) * lx + std::sin(y) * lz, truth.center.y + ly,
                   truth.center.z - std::sin(y) * lx + std::cos(y) * lz});
  }
  const auto fit = fit_min_area_obb(pts, 0.5);
  const double dyaw = std::abs(wrap180((fit.box.yaw_deg - truth.yaw_deg) * 2.0)) / 2.0;
  CHECK(dyaw <= 0.5 + 1e-9);  // mod-90 distance via doubled-angle wrap
  const double truth_area = 4.0 * truth.half_extents.x * truth.half_extents.z;
  CHECK(fit.footprint_area == doctest::Approx(truth_area).epsilon(0.02));
  for (const Vec3& p : pts) CHECK(fit.box.contains(p, 1e-9));
}

TEST_CASE("fit_min_area_obb: area monotone non-increasing as the step shrinks") {
  Rng rng(5);
  std::vector<Vec3> pts;
  for (int i = 0; i < 200; ++i)
    pts.push_back({rng.uniform(-1, 1), rng.uniform(0, 1), rng.uniform(-2, 2)});
  double prev = 1e300;
  for (double step : {2.0, 1.0, 0.5, 0.25}) {
    const double area = fit_min_area_obb(pts, step).footprint_area;
    CHECK(area <= prev + 1e-9);
    prev = area;
  }
}

TEST_CASE("fit_min_area_obb: error and degenerate paths") {
  CHECK_THROWS_AS(fit_min_area_obb(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}}, 0.5),
                  std::invalid_argument);
  const std::vector<Vec3> line{{0, 0, 0}, {1, 0, 1}, {2, 0.5, 2}, {3, 1, 3}};
  const auto fit = fit_min_area_obb(line, 0.5);
  CHECK(fit.degenerate);
  fit.box.validate();  // floored extents keep the box valid
  CHECK_THROWS_AS(fit_min_area_obb(line, 0.0), std::invalid_argument);
}

TEST_CASE("iou_box2d closed forms") {
  const Box2D a{0, 0, 1, 1};
  CHECK(iou_box2d(a, a) == doctest::Approx(1.0));
  CHECK(iou_box2d(a, {2, 2, 3, 3}) == doctest::Approx(0.0));
  CHECK(iou_box2d(a, {0.5, 0, 1.5, 1}) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("iou_obb3d closed forms") {
  OrientedBox3D a;
  a.center = {0, 0, 0};
  a.half_extents = {0.5, 0.5, 0.5};
  a.yaw_deg = 0.0;
  OrientedBox3D b = a;
  CHECK(iou_obb3d(a, a) == doctest::Approx(1.0));
  b.center.x = 0.5;
  CHECK(iou_obb3d(a, b) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("iou_obb3d matches a Monte-Carlo oracle") {
  Rng rng(123);
  for (int i = 0; i < 10; ++i) {
    OrientedBox3D a = random_box(rng);
    OrientedBox3D b = random_box(rng);
    const double mc = monte_carlo_iou(a, b, 200000, mix_seed(9, i));
    CHECK(std::abs(iou_obb3d(a, b) - mc) < 0.02);
  }
}

TEST_CASE("iou_obb3d invariant under a common rigid transform") {
  Rng rng(321);
  for (int i = 0; i < 50; ++i) {
    OrientedBox3D a = random_box(rng);
    OrientedBox3D b = random_box(rng);
    const double base = iou_obb3d(a, b);
    const double dyaw = rng.uniform(0, 360);
    const Vec3 shift{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    auto moved = [&](OrientedBox3D bx) {
      const double r = deg2rad(dyaw);
      const double c = std::cos(r), s = std::sin(r);
      const Vec3 ctr = bx.center;
      bx.center = Vec3{c * ctr.x + s * ctr.z, ctr.y, -s * ctr.x + c * ctr.z} + shift;
      bx.yaw_deg = normalize_box_yaw(bx.yaw_deg + dyaw);
      return bx;
    };
    CHECK(iou_obb3d(moved(a), moved(b)) == doctest::Approx(base).epsilon(1e-6));
  }
}

TEST_CASE("mask overlap closed forms and properties") {
  Mask a(20, 10), b(20, 10);
  for (int i = 0; i < 100; ++i) a.data[i] = 1;
  for (int i = 50; i < 150; ++i) b.data[i] = 1;
  CHECK(iou_masks(a, b) == doctest::Approx(1.0 / 3.0));
  CHECK(dice_masks(a, b) == doctest::Approx(0.5));
  CHECK(iou_masks(a, a) == doctest::Approx(1.0));
  CHECK(dice_masks(a, a) == doctest::Approx(1.0));

  Mask empty(20, 10);
  CHECK(iou_masks(empty, empty) == doctest::Approx(0.0));
  CHECK(iou_masks(empty, a) == doctest::Approx(0.0));

  Mask wrong(10, 10);
  CHECK_THROWS_AS(iou_masks(a, wrong), std::invalid_argument);

  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    Mask x(16, 16), y(16, 16);
    for (size_t i = 0; i < x.size(); ++i) {
      x.data[i] = rng.bernoulli(0.3);
      y.data[i] = rng.bernoulli(0.3);
    }
    const double iou = iou_masks(x, y);
    const double dice = dice_masks(x, y);
    CHECK(dice >= iou - 1e-12);
    CHECK(iou >= 0.0);
    CHECK(dice <= 1.0);
    CHECK(iou == iou_masks(y, x));
  }
}
