#pragma once

#include <optional>
#include <vector>

#include "vantage/scene/scene.hpp"

namespace vantage::scene {

struct Cell {
  int x = 0;
  int z = 0;
  bool operator==(const Cell&) const = default;
};

/// 4-connected A* with unit edge cost. Returns the full cell sequence
/// including both endpoints, or absent when disconnected. Endpoints must be
/// inside the grid; a blocked endpoint is simply unreachable.
std::optional<std::vector<Cell>> shortest_path(const Scene& scene, Cell from, Cell to);

}  // namespace vantage::scene
