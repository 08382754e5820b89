#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <map>

#include "vantage/core/rng.hpp"
#include "vantage/geom/camera.hpp"
#include "vantage/scene/generate.hpp"
#include "vantage/sim/episode.hpp"

using namespace vantage;
using namespace vantage::render;
using namespace vantage::scene;
using namespace vantage::sim;

namespace {

Scene empty_room(double side = 6.0) {
  auto cfg = default_scene_config();
  cfg.objects_min = cfg.objects_max = 0;
  cfg.room_min = cfg.room_max = side;
  return generate_scene(1, cfg);
}

Scene cube_room(Vec3 center, Vec3 half, double yaw = 0.0) {
  Scene sc = empty_room(8.0);
  SceneObject o;
  o.id = 1;
  o.class_name = "crate";
  o.attributes = {"gray"};
  o.box = {center, half, yaw};
  sc.objects.push_back(o);
  sc.grid = sc.derive_grid();
  sc.rebuild_caches();
  return sc;
}

const geom::CameraConfig kCam{128, 128, 90.0, 1.0, 20.0};

}  // namespace

TEST_CASE("render: empty scene is all max_range looking up") {
  const Scene sc = empty_room();
  // pitch 60 up from the room center: no walls or floor in view
  const Pose pose{{3, 1, 3}, 0, 60};
  const Observation obs = render::render(sc, pose, kCam);
  uint64_t background = 0;
  for (size_t i = 0; i < obs.depth.size(); ++i) {
    if (obs.depth[i] == static_cast<float>(kCam.max_range)) {
      CHECK(obs.instance[i] == 0);
      ++background;
    }
  }
  CHECK(background > obs.depth.size() / 2);
}

TEST_CASE("render: unit cube face-on at 2m gives center depth 1.5") {
  // cube center 2 m ahead, half extent 0.5 -> front face at 1.5 m
  const Scene sc = cube_room({3, 1, 5}, {0.5, 0.5, 0.5});
  const Pose pose{{3, 1, 3}, 0, 0};
  const Observation obs = render::render(sc, pose, kCam);
  CHECK(obs.id_at(64, 64) == 1);
  CHECK(obs.depth_at(64, 64) == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("render: deterministic") {
  const Scene sc = generate_scene(9, default_scene_config());
  const Pose pose{{2, 1, 2}, 45, -10};
  const Observation a = render::render(sc, pose, kCam);
  const Observation b = render::render(sc, pose, kCam);
  CHECK(a.depth == b.depth);
  CHECK(a.instance == b.instance);
}

TEST_CASE("render: depth image consistent with backprojection onto hit boxes") {
  const Scene sc = generate_scene(21, default_scene_config());
  const auto spec = spawn_episode(sc, 4, kCam);
  REQUIRE(spec.has_value());
  const Observation obs = render::render(sc, spec->start_pose, kCam);
  int checked = 0;
  for (int y = 0; y < obs.height; y += 7) {
    for (int x = 0; x < obs.width; x += 7) {
      const int32_t id = obs.id_at(x, y);
      if (id == 0) continue;
      const Vec3 p = geom::backproject_pixel(
          kCam, spec->start_pose, {x + 0.5, y + 0.5}, obs.depth_at(x, y));
      const auto& box = sc.object_or_throw(id).box;
      // Hit point lies on the box surface: inside with slack, not strictly interior.
      CHECK(box.contains(p, 1e-4));
      CHECK_FALSE(box.contains(p, -1e-3));
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("render: per-object visible pixels partition the nonzero pixels") {
  const Scene sc = generate_scene(33, default_scene_config());
  const Pose pose{{sc.bounds.width() / 2, 1, sc.bounds.depth() / 2}, 120, -5};
  const Observation obs = render::render(sc, pose, kCam);
  uint64_t nonzero = 0;
  for (int32_t id : obs.instance) nonzero += (id != 0);
  uint64_t sum = 0;
  for (const auto& o : sc.objects) sum += id_stats(obs, o.id).count;
  CHECK(sum == nonzero);
}

TEST_CASE("visibility: unoccluded centered object") {
  const Scene sc = cube_room({4, 0.4, 6}, {0.4, 0.4, 0.4});
  const Pose pose{{4, 1, 4}, 0, -10};  // look slightly down to center the cube
  const VisibilityStats vs = visibility(sc, pose, kCam, 1);
  CHECK(vs.visible_fraction == doctest::Approx(1.0));
  CHECK(std::abs(vs.center_offset.x) < 0.02);
  CHECK(std::abs(vs.center_offset.y) < 0.1);
  CHECK_THROWS_AS(visibility(sc, pose, kCam, 99), std::invalid_argument);
}

TEST_CASE("visibility: object fully behind a wall of crates has zero visible pixels") {
  Scene sc = empty_room(8.0);
  SceneObject target;
  target.id = 1;
  target.class_name = "crate";
  target.attributes = {"red"};
  target.box = {{4, 0.4, 6.5}, {0.3, 0.4, 0.3}, 0.0};
  SceneObject occluder;
  occluder.id = 2;
  occluder.class_name = "cabinet";
  occluder.attributes = {"white"};
  occluder.box = {{4, 1.25, 5.0}, {2.5, 1.25, 0.3}, 0.0};
  sc.objects = {target, occluder};
  sc.grid = sc.derive_grid();
  sc.rebuild_caches();
  const Pose pose{{4, 1, 3}, 0, 0};
  const VisibilityStats vs = visibility(sc, pose, kCam, 1);
  CHECK(vs.visible_pixels == 0);
  CHECK(vs.silhouette_pixels > 0);
  CHECK(vs.visible_fraction == 0.0);
}

TEST_CASE("visibility: half-covered object has visible_fraction near 0.5") {
  Scene sc = empty_room(8.0);
  SceneObject target;
  target.id = 1;
  target.class_name = "crate";
  target.attributes = {"red"};
  target.box = {{4, 1.0, 6.0}, {1.0, 1.0, 0.2}, 0.0};
  // occluder covering exactly the left half of the target's silhouette
  SceneObject occluder;
  occluder.id = 2;
  occluder.class_name = "cabinet";
  occluder.attributes = {"white"};
  occluder.box = {{3.0, 1.0, 5.0}, {1.0, 1.4, 0.1}, 0.0};
  sc.objects = {target, occluder};
  sc.grid = sc.derive_grid();
  sc.rebuild_caches();
  const Pose pose{{4, 1, 2}, 0, 0};
  const VisibilityStats vs = visibility(sc, pose, kCam, 1);
  CHECK(vs.visible_fraction == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("render: 512x512 high-res frame works and 128x128 is fast enough") {
  const Scene sc = generate_scene(50, default_scene_config());
  geom::CameraConfig hi = kCam;
  hi.width = hi.height = 512;
  const Pose pose{{2, 1, 2}, 30, 0};
  const Observation big = render::render(sc, pose, hi);
  CHECK(big.width == 512);

  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 20; ++i) render::render(sc, pose, kCam);
  const auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
  CHECK(dt.count() / 20.0 < 10.0);  // performance budget, not correctness
}

TEST_CASE("spawn_episode: targets meet the visibility threshold (audited)") {
  const auto cfg = default_scene_config();
  int spawned = 0;
  for (uint64_t s = 0; s < 25; ++s) {
    const Scene sc = generate_scene(500 + s, cfg);
    for (uint64_t e = 0; e < 4; ++e) {
      const auto spec = spawn_episode(sc, mix_seed(s, e), kCam);
      if (!spec) continue;
      ++spawned;
      const auto [cx, cz] = sc.grid.cell_of(spec->start_pose.position.x, spec->start_pose.position.z);
      CHECK(sc.grid.navigable(cx, cz));
      CHECK(spec->start_pose.position.y == doctest::Approx(kCam.eye_height));
      const Observation obs = render::render(sc, spec->start_pose, kCam);
      const uint64_t pixels = id_stats(obs, spec->instruction.target_id).count;
      CHECK(pixels >= static_cast<uint64_t>(0.01 * kCam.width * kCam.height));
      CHECK(spec->horizon == 10);
    }
  }
  CHECK(spawned >= 80);
}

TEST_CASE("step: forward moves 0.25m along the heading") {
  const Scene sc = empty_room();
  AgentState st;
  st.pose = Pose{{3, 1, 3}, 0, 0};
  const AgentState nx = step(st, sc, Action::move_forward, 10);
  CHECK(nx.pose.position.z == doctest::Approx(3.25));
  CHECK(nx.pose.position.x == doctest::Approx(3.0));
  CHECK(nx.step == 1);
  CHECK_FALSE(nx.done);
}

TEST_CASE("step: blocked forward is a no-op that still consumes budget") {
  const Scene sc = empty_room();
  AgentState st;
  st.pose = Pose{{3, 1, 5.9}, 0, 0};  // next cell crosses the wall boundary
  const AgentState nx = step(st, sc, Action::move_forward, 10);
  CHECK(nx.pose.position.z == doctest::Approx(5.9));
  CHECK(nx.step == 1);
}

TEST_CASE("step: 36 left turns return to the starting yaw") {
  const Scene sc = empty_room();
  AgentState st;
  st.pose = Pose{{3, 1, 3}, 77, 0};
  for (int i = 0; i < 36; ++i) st = step(st, sc, Action::turn_left, 100);
  CHECK(st.pose.yaw_deg == doctest::Approx(77.0));
}

TEST_CASE("step: pitch clamps, stop and horizon terminate, done rejects") {
  const Scene sc = empty_room();
  AgentState st;
  st.pose = Pose{{3, 1, 3}, 0, 55};
  st = step(st, sc, Action::look_up, 10);
  CHECK(st.pose.pitch_deg == doctest::Approx(60.0));
  st = step(st, sc, Action::look_up, 10);
  CHECK(st.pose.pitch_deg == doctest::Approx(60.0));

  AgentState stopper;
  stopper.pose = Pose{{3, 1, 3}, 0, 0};
  const AgentState done = step(stopper, sc, Action::stop, 10);
  CHECK(done.done);
  CHECK(done.done_reason == DoneReason::stopped);
  CHECK_THROWS_AS(step(done, sc, Action::move_forward, 10), std::logic_error);

  AgentState run;
  run.pose = Pose{{3, 1, 3}, 0, 0};
  for (int i = 0; i < 10; ++i) {
    CHECK_FALSE(run.done);
    run = step(run, sc, Action::turn_left, 10);
  }
  CHECK(run.done);
  CHECK(run.done_reason == DoneReason::horizon);
}

TEST_CASE("step: collision fuzz keeps the agent on navigable cells") {
  const Scene sc = generate_scene(88, default_scene_config());
  const auto spec = spawn_episode(sc, 2, kCam);
  REQUIRE(spec.has_value());
  Rng rng(1234);
  AgentState st;
  st.pose = spec->start_pose;
  for (int i = 0; i < 100000; ++i) {
    const Action a = static_cast<Action>(rng.uniform_int(0, 4));  // everything but stop
    st = step(st, sc, a, 1 << 30);
    const auto [cx, cz] = sc.grid.cell_of(st.pose.position.x, st.pose.position.z);
    if (!sc.grid.navigable(cx, cz)) {
      // One failure message with coordinates is plenty.
      REQUIRE_MESSAGE(false, "agent escaped at ", st.pose.position.x, ",", st.pose.position.z);
    }
  }
}

TEST_CASE("step: determinism across replays") {
  const Scene sc = generate_scene(91, default_scene_config());
  const auto spec = spawn_episode(sc, 6, kCam);
  REQUIRE(spec.has_value());
  Rng rng(5);
  std::vector<Action> seq;
  for (int i = 0; i < 9; ++i) seq.push_back(static_cast<Action>(rng.uniform_int(0, 4)));

  auto run = [&]() {
    std::vector<Pose> poses;
    AgentState st;
    st.pose = spec->start_pose;
    for (Action a : seq) {
      st = step(st, sc, a, 10);
      poses.push_back(st.pose);
    }
    return poses;
  };
  const auto a = run();
  const auto b = run();
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].position == b[i].position);
    CHECK(a[i].yaw_deg == b[i].yaw_deg);
  }
}
