#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vantage/geom/box.hpp"
#include "vantage/kernels/kernels.hpp"

namespace vantage::scene {

using geom::OrientedBox3D;

struct SceneObject {
  int id = 0;  // unique, > 0; 0 is reserved for background/structure
  std::string class_name;
  std::vector<std::string> attributes;
  OrientedBox3D box;
  std::optional<int> nearest_landmark_id;
};

struct Bounds {
  double min_x = 0.0, min_z = 0.0, max_x = 0.0, max_z = 0.0;
  double width() const { return max_x - min_x; }
  double depth() const { return max_z - min_z; }
  double area() const { return width() * depth(); }
};

/// Occupancy grid over the floor rectangle. A cell is navigable iff its
/// square intersects no object footprint inflated by the agent radius and
/// lies fully inside the bounds.
struct NavGrid {
  double cell_size = 0.25;
  double min_x = 0.0, min_z = 0.0;
  int nx = 0, nz = 0;
  std::vector<uint8_t> free;  // 1 = navigable

  bool in_grid(int cx, int cz) const { return cx >= 0 && cx < nx && cz >= 0 && cz < nz; }
  bool navigable(int cx, int cz) const {
    return in_grid(cx, cz) && free[static_cast<size_t>(cz) * nx + cx];
  }
  std::pair<int, int> cell_of(double x, double z) const {
    return {static_cast<int>(std::floor((x - min_x) / cell_size)),
            static_cast<int>(std::floor((z - min_z) / cell_size))};
  }
  Vec2 center_of(int cx, int cz) const {
    return {min_x + (cx + 0.5) * cell_size, min_z + (cz + 0.5) * cell_size};
  }
  size_t navigable_count() const;
};

enum class TaskType { grounding, segmentation, box3d };
inline constexpr int kNumTaskTypes = 3;

const char* task_type_name(TaskType t);
std::optional<TaskType> task_type_from_name(const std::string& name);

struct Instruction {
  std::string text;
  TaskType task_type_gt = TaskType::grounding;  // h_I
  std::string description_gt;                   // p_I
  int target_id = 0;
};

struct Scene {
  static constexpr int kFormatVersion = 1;

  Bounds bounds;
  std::vector<SceneObject> objects;
  NavGrid grid;
  uint64_t seed = 0;
  double agent_radius = 0.15;
  double wall_height = 3.0;
  bool placement_reduced = false;  // generator had to drop objects to fit

  const SceneObject* find_object(int id) const;
  const SceneObject& object_or_throw(int id) const;

  /// Structure cuboids (floor + four walls), instance id 0. Occlude but are
  /// not targets.
  std::vector<OrientedBox3D> structure_boxes() const;

  /// All cuboids prepared for the raycast kernels: structure first, then
  /// objects in id order.
  const std::vector<kernels::RayBox>& ray_boxes() const;

  /// Ray boxes for a single object, used for silhouette renders.
  std::vector<kernels::RayBox> ray_boxes_for(int id) const;

  /// Recomputes the occupancy grid from bounds and object footprints.
  NavGrid derive_grid() const;

  void rebuild_caches();
  void validate() const;

 private:
  mutable std::vector<kernels::RayBox> ray_cache_;
};

kernels::RayBox to_ray_box(const OrientedBox3D& box, int id);

}  // namespace vantage::scene
