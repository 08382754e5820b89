#include "vantage/scene/pathfind.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace vantage::scene {

std::optional<std::vector<Cell>> shortest_path(const Scene& scene, Cell from, Cell to) {
  const NavGrid& g = scene.grid;
  if (!g.in_grid(from.x, from.z) || !g.in_grid(to.x, to.z))
    throw std::invalid_argument("shortest_path: cell outside grid");
  if (!g.navigable(from.x, from.z) || !g.navigable(to.x, to.z)) return std::nullopt;

  const size_t n = static_cast<size_t>(g.nx) * g.nz;
  auto idx = [&](int x, int z) { return static_cast<size_t>(z) * g.nx + x; };
  auto heuristic = [&](int x, int z) { return std::abs(x - to.x) + std::abs(z - to.z); };

  std::vector<int> dist(n, -1);
  std::vector<int32_t> parent(n, -1);
  // (f, g, index): ties broken on g then index so the expansion order is
  // deterministic regardless of push order.
  using Node = std::tuple<int, int, int32_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> open;

  dist[idx(from.x, from.z)] = 0;
  open.push({heuristic(from.x, from.z), 0, static_cast<int32_t>(idx(from.x, from.z))});

  while (!open.empty()) {
    const auto [f, gcost, cur] = open.top();
    open.pop();
    if (dist[cur] != gcost) continue;  // stale entry
    const int cx = static_cast<int>(cur % g.nx);
    const int cz = static_cast<int>(cur / g.nx);
    if (cx == to.x && cz == to.z) break;
    constexpr int dx[4] = {1, -1, 0, 0};
    constexpr int dz[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int nx = cx + dx[k], nz = cz + dz[k];
      if (!g.navigable(nx, nz)) continue;
      const size_t ni = idx(nx, nz);
      const int nd = gcost + 1;
      if (dist[ni] == -1 || nd < dist[ni]) {
        dist[ni] = nd;
        parent[ni] = cur;
        open.push({nd + heuristic(nx, nz), nd, static_cast<int32_t>(ni)});
      }
    }
  }

  const size_t goal = idx(to.x, to.z);
  if (dist[goal] == -1) return std::nullopt;

  std::vector<Cell> path;
  for (int32_t cur = static_cast<int32_t>(goal); cur != -1; cur = parent[cur])
    path.push_back({static_cast<int>(cur % g.nx), static_cast<int>(cur / g.nx)});
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace vantage::scene
