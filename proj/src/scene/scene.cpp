#include "vantage/scene/scene.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vantage/geom/poly2.hpp"

namespace vantage::scene {

size_t NavGrid::navigable_count() const {
  size_t n = 0;
  for (uint8_t f : free) n += f;
  return n;
}

const char* task_type_name(TaskType t) {
  switch (t) {
    case TaskType::grounding: return "grounding";
    case TaskType::segmentation: return "segmentation";
    case TaskType::box3d: return "box3d";
  }
  return "?";
}

std::optional<TaskType> task_type_from_name(const std::string& name) {
  if (name == "grounding") return TaskType::grounding;
  if (name == "segmentation") return TaskType::segmentation;
  if (name == "box3d") return TaskType::box3d;
  return std::nullopt;
}

const SceneObject* Scene::find_object(int id) const {
  for (const auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

const SceneObject& Scene::object_or_throw(int id) const {
  const SceneObject* o = find_object(id);
  if (!o) throw std::invalid_argument("scene: unknown object id " + std::to_string(id));
  return *o;
}

std::vector<OrientedBox3D> Scene::structure_boxes() const {
  const double t = 0.2;  // wall/floor thickness
  const double h = wall_height;
  const double cx = (bounds.min_x + bounds.max_x) * 0.5;
  const double cz = (bounds.min_z + bounds.max_z) * 0.5;
  const double hw = bounds.width() * 0.5;
  const double hd = bounds.depth() * 0.5;
  std::vector<OrientedBox3D> s;
  // floor, top face at y = 0
  s.push_back({{cx, -t * 0.5, cz}, {hw + t, t * 0.5, hd + t}, 0.0});
  // walls sit just outside the bounds so their inner faces are the bounds
  s.push_back({{bounds.min_x - t * 0.5, h * 0.5, cz}, {t * 0.5, h * 0.5, hd + t}, 0.0});
  s.push_back({{bounds.max_x + t * 0.5, h * 0.5, cz}, {t * 0.5, h * 0.5, hd + t}, 0.0});
  s.push_back({{cx, h * 0.5, bounds.min_z - t * 0.5}, {hw + t, h * 0.5, t * 0.5}, 0.0});
  s.push_back({{cx, h * 0.5, bounds.max_z + t * 0.5}, {hw + t, h * 0.5, t * 0.5}, 0.0});
  return s;
}

kernels::RayBox to_ray_box(const OrientedBox3D& box, int id) {
  const double y = deg2rad(box.yaw_deg);
  return kernels::RayBox{
      static_cast<float>(box.center.x),       static_cast<float>(box.center.y),
      static_cast<float>(box.center.z),       static_cast<float>(box.half_extents.x),
      static_cast<float>(box.half_extents.y), static_cast<float>(box.half_extents.z),
      static_cast<float>(std::cos(y)),        static_cast<float>(std::sin(y)),
      id};
}

const std::vector<kernels::RayBox>& Scene::ray_boxes() const {
  if (ray_cache_.empty()) {
    for (const auto& b : structure_boxes()) ray_cache_.push_back(to_ray_box(b, 0));
    for (const auto& o : objects) ray_cache_.push_back(to_ray_box(o.box, o.id));
  }
  return ray_cache_;
}

std::vector<kernels::RayBox> Scene::ray_boxes_for(int id) const {
  return {to_ray_box(object_or_throw(id).box, id)};
}

NavGrid Scene::derive_grid() const {
  NavGrid g;
  g.cell_size = grid.cell_size > 0 ? grid.cell_size : 0.25;
  g.min_x = bounds.min_x;
  g.min_z = bounds.min_z;
  g.nx = static_cast<int>(std::ceil(bounds.width() / g.cell_size - 1e-9));
  g.nz = static_cast<int>(std::ceil(bounds.depth() / g.cell_size - 1e-9));
  g.free.assign(static_cast<size_t>(g.nx) * g.nz, 0);

  std::vector<geom::Poly2> inflated;
  for (const auto& o : objects) {
    const auto r = geom::rotated_rect({o.box.center.x, o.box.center.z},
                                      o.box.half_extents.x + agent_radius,
                                      o.box.half_extents.z + agent_radius, o.box.yaw_deg);
    inflated.emplace_back(r.begin(), r.end());
  }

  for (int cz = 0; cz < g.nz; ++cz) {
    for (int cx = 0; cx < g.nx; ++cx) {
      const double x0 = g.min_x + cx * g.cell_size;
      const double z0 = g.min_z + cz * g.cell_size;
      const double x1 = x0 + g.cell_size;
      const double z1 = z0 + g.cell_size;
      if (x1 > bounds.max_x + 1e-9 || z1 > bounds.max_z + 1e-9) continue;
      const geom::Poly2 cell{{x0, z0}, {x1, z0}, {x1, z1}, {x0, z1}};
      bool blocked = false;
      for (const auto& fp : inflated) {
        if (geom::convex_overlap(cell, fp)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) g.free[static_cast<size_t>(cz) * g.nx + cx] = 1;
    }
  }
  return g;
}

void Scene::rebuild_caches() {
  ray_cache_.clear();
  ray_boxes();
}

void Scene::validate() const {
  if (bounds.width() <= 0 || bounds.depth() <= 0)
    throw std::invalid_argument("scene: empty bounds");
  std::set<int> ids;
  for (const auto& o : objects) {
    if (o.id <= 0) throw std::invalid_argument("scene: object id must be > 0");
    if (!ids.insert(o.id).second)
      throw std::invalid_argument("scene: duplicate object id " + std::to_string(o.id));
    o.box.validate();
    const auto fp = o.box.footprint();
    for (const auto& c : fp) {
      if (c.x < bounds.min_x - 1e-9 || c.x > bounds.max_x + 1e-9 || c.y < bounds.min_z - 1e-9 ||
          c.y > bounds.max_z + 1e-9)
        throw std::invalid_argument("scene: object " + std::to_string(o.id) + " outside bounds");
    }
    if (o.nearest_landmark_id && !find_object(*o.nearest_landmark_id))
      throw std::invalid_argument("scene: dangling landmark id");
  }
}

}  // namespace vantage::scene
