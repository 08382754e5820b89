#pragma once

#include <cstdint>

#include "vantage/scene/scene.hpp"

namespace vantage::scene {

struct ClassSpec {
  std::string name;
  double min_half = 0.2;   // footprint half-extent range, meters
  double max_half = 0.5;
  double min_height = 0.4;  // full height range
  double max_height = 1.0;
};

struct SceneGenConfig {
  double room_min = 6.0;  // square-ish room side range, meters
  double room_max = 9.0;
  int objects_min = 4;
  int objects_max = 8;
  double cell_size = 0.25;
  double agent_radius = 0.15;
  double min_footprint_separation = 0.05;
  double min_free_fraction = 0.30;  // largest navigable component vs floor area
  std::vector<ClassSpec> classes;
  std::vector<std::string> colors;
  std::vector<std::string> sizes;

  void validate() const;
};

SceneGenConfig default_scene_config();

/// Deterministic procedural room: places non-overlapping cuboids with class +
/// attribute labels on a navigable grid. Retries shrink the object count when
/// placement fails, flagging the scene.
Scene generate_scene(uint64_t seed, const SceneGenConfig& cfg);

}  // namespace vantage::scene
