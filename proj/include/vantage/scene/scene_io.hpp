#pragma once

#include <string>

#include "vantage/scene/scene.hpp"

namespace vantage::scene {

/// Scene file I/O. The format is a single versioned JSON document carrying
/// object records, grid metadata, the stored occupancy rows and the seed; the
/// loader re-derives the grid and rejects files whose stored occupancy
/// disagrees.
std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);

void save_scene(const Scene& scene, const std::string& path);
Scene load_scene(const std::string& path);

}  // namespace vantage::scene
