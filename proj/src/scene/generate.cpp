#include "vantage/scene/generate.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "vantage/core/rng.hpp"
#include "vantage/geom/poly2.hpp"

namespace vantage::scene {

void SceneGenConfig::validate() const {
  if (room_min <= 1.0 || room_max < room_min)
    throw std::invalid_argument("scene config: bad room size range");
  if (objects_min < 0 || objects_max < objects_min)
    throw std::invalid_argument("scene config: bad object count range");
  if (cell_size <= 0.0) throw std::invalid_argument("scene config: cell_size must be > 0");
  if (classes.empty()) throw std::invalid_argument("scene config: empty class vocabulary");
  for (const auto& c : classes) {
    if (c.name.empty() || c.min_half <= 0 || c.max_half < c.min_half || c.min_height <= 0 ||
        c.max_height < c.min_height)
      throw std::invalid_argument("scene config: bad class spec '" + c.name + "'");
  }
}

SceneGenConfig default_scene_config() {
  SceneGenConfig cfg;
  cfg.classes = {
      {"chair", 0.22, 0.30, 0.45, 0.55},   {"table", 0.40, 0.60, 0.70, 0.80},
      {"sofa", 0.45, 0.70, 0.70, 0.85},    {"lamp", 0.12, 0.18, 0.50, 0.70},
      {"cabinet", 0.30, 0.45, 0.90, 1.10}, {"plant", 0.15, 0.25, 0.60, 0.80},
      {"stool", 0.16, 0.22, 0.40, 0.50},   {"crate", 0.25, 0.35, 0.50, 0.60},
  };
  cfg.colors = {"red", "blue", "green", "yellow", "white", "black", "brown"};
  cfg.sizes = {"small", "large"};
  return cfg;
}

namespace {

// Largest 4-connected navigable component as a fraction of the floor area.
double largest_component_fraction(const NavGrid& g, const Bounds& bounds) {
  std::vector<uint8_t> seen(g.free.size(), 0);
  size_t best = 0;
  for (int z0 = 0; z0 < g.nz; ++z0) {
    for (int x0 = 0; x0 < g.nx; ++x0) {
      const size_t idx0 = static_cast<size_t>(z0) * g.nx + x0;
      if (!g.free[idx0] || seen[idx0]) continue;
      size_t count = 0;
      std::queue<std::pair<int, int>> q;
      q.push({x0, z0});
      seen[idx0] = 1;
      while (!q.empty()) {
        auto [x, z] = q.front();
        q.pop();
        ++count;
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dz[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int nx = x + dx[k], nz = z + dz[k];
          if (!g.navigable(nx, nz)) continue;
          const size_t idx = static_cast<size_t>(nz) * g.nx + nx;
          if (!seen[idx]) {
            seen[idx] = 1;
            q.push({nx, nz});
          }
        }
      }
      best = std::max(best, count);
    }
  }
  return static_cast<double>(best) * g.cell_size * g.cell_size / bounds.area();
}

std::vector<std::string> sample_attributes(Rng& rng, const SceneGenConfig& cfg) {
  std::vector<std::string> attrs;
  if (!cfg.sizes.empty() && rng.bernoulli(0.5))
    attrs.push_back(cfg.sizes[rng.uniform_int(0, static_cast<int>(cfg.sizes.size()) - 1)]);
  if (!cfg.colors.empty())
    attrs.push_back(cfg.colors[rng.uniform_int(0, static_cast<int>(cfg.colors.size()) - 1)]);
  return attrs;
}

bool try_build(uint64_t seed, const SceneGenConfig& cfg, int object_count, Scene* out) {
  Rng rng(mix_seed(seed, stream_tag("scene-gen")));
  Scene sc;
  sc.seed = seed;
  sc.agent_radius = cfg.agent_radius;
  const double w = rng.uniform(cfg.room_min, cfg.room_max);
  const double d = rng.uniform(cfg.room_min, cfg.room_max);
  sc.bounds = {0.0, 0.0, w, d};
  sc.grid.cell_size = cfg.cell_size;

  std::vector<geom::Poly2> placed;  // footprints inflated by half the separation
  for (int i = 0; i < object_count; ++i) {
    const ClassSpec& cls = cfg.classes[rng.uniform_int(0, static_cast<int>(cfg.classes.size()) - 1)];
    bool ok = false;
    for (int attempt = 0; attempt < 60 && !ok; ++attempt) {
      OrientedBox3D box;
      const double hx = rng.uniform(cls.min_half, cls.max_half);
      const double hz = rng.uniform(cls.min_half, cls.max_half);
      const double height = rng.uniform(cls.min_height, cls.max_height);
      box.half_extents = {hx, height * 0.5, hz};
      box.yaw_deg = geom::normalize_box_yaw(rng.uniform(0.0, 180.0));
      const double margin = std::max(hx, hz) + 0.3;
      box.center = {rng.uniform(margin, w - margin), height * 0.5, rng.uniform(margin, d - margin)};
      if (margin * 2 >= w || margin * 2 >= d) break;

      const double pad = cfg.min_footprint_separation * 0.5;
      const auto infl = geom::rotated_rect({box.center.x, box.center.z}, hx + pad, hz + pad,
                                           box.yaw_deg);
      const geom::Poly2 poly(infl.begin(), infl.end());
      bool clash = false;
      for (const auto& other : placed) {
        if (geom::convex_overlap(poly, other)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;

      SceneObject obj;
      obj.id = static_cast<int>(sc.objects.size()) + 1;
      obj.class_name = cls.name;
      obj.attributes = sample_attributes(rng, cfg);
      obj.box = box;
      // Same-class objects must stay distinguishable by attributes.
      bool ambiguous = false;
      for (const auto& o : sc.objects)
        if (o.class_name == obj.class_name && o.attributes == obj.attributes) ambiguous = true;
      if (ambiguous) continue;

      sc.objects.push_back(obj);
      placed.push_back(poly);
      ok = true;
    }
    if (!ok) return false;
  }

  // Nearest landmark per object (by center distance).
  for (auto& o : sc.objects) {
    double best = 1e300;
    for (const auto& other : sc.objects) {
      if (other.id == o.id) continue;
      const double dist = norm(other.box.center - o.box.center);
      if (dist < best) {
        best = dist;
        o.nearest_landmark_id = other.id;
      }
    }
  }

  sc.grid = sc.derive_grid();
  if (largest_component_fraction(sc.grid, sc.bounds) < cfg.min_free_fraction) return false;
  sc.validate();
  sc.rebuild_caches();
  *out = std::move(sc);
  return true;
}

}  // namespace

Scene generate_scene(uint64_t seed, const SceneGenConfig& cfg) {
  cfg.validate();
  Rng count_rng(mix_seed(seed, stream_tag("scene-count")));
  int count = cfg.objects_min == cfg.objects_max
                  ? cfg.objects_min
                  : count_rng.uniform_int(cfg.objects_min, cfg.objects_max);
  Scene sc;
  bool reduced = false;
  for (;;) {
    if (try_build(seed, cfg, count, &sc)) {
      sc.placement_reduced = reduced;
      return sc;
    }
    if (count == 0)
      throw std::runtime_error("generate_scene: failed even with an empty room");
    --count;
    reduced = true;
  }
}

}  // namespace vantage::scene
