#pragma once

#include <vector>

#include "vantage/geom/camera.hpp"
#include "vantage/scene/scene.hpp"

namespace vantage::render {

using geom::CameraConfig;
using geom::Pose;


/// Per-pixel nearest-hit depth (axis distance, max_range sentinel for no hit)
/// and instance id (0 = background/structure).
struct Observation {
  int width = 0;
  int height = 0;
  std::vector<float> depth;
  std::vector<int32_t> instance;
  Pose pose;
  int step_index = 0;
  CameraConfig cam;

  float depth_at(int x, int y) const { return depth[static_cast<size_t>(y) * width + x]; }
  int32_t id_at(int x, int y) const { return instance[static_cast<size_t>(y) * width + x]; }
};

struct VisibilityStats {
  uint64_t visible_pixels = 0;
  uint64_t silhouette_pixels = 0;  // object alone, occluders ignored, clipped to frame
  double visible_fraction = 0.0;
  Vec2 center_offset;  // visible-pixel centroid relative to image center, in [-0.5,0.5]^2
};

Observation render(const scene::Scene& scene, const Pose& pose, const CameraConfig& cam);

VisibilityStats visibility(const scene::Scene& scene, const Pose& pose, const CameraConfig& cam,
                           int object_id);

/// Same, reusing an already rendered full frame for the visible-pixel side.
VisibilityStats visibility_in(const Observation& full, const scene::Scene& scene, int object_id);

/// Visible-pixel count + centroid for one id in an already rendered frame.
struct IdStats {
  uint64_t count = 0;
  Vec2 centroid;  // pixel-center coordinates, valid when count > 0
};
IdStats id_stats(const Observation& obs, int32_t id);

}  // namespace vantage::render
