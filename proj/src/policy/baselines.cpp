#include "vantage/policy/baselines.hpp"

#include <queue>
#include <sstream>

namespace vantage::policy {

namespace {

constexpr double kFacingToleranceDeg = 5.0;

Decision base_decision(TaskType h, const std::string& p, Action a, std::string thoughts) {
  Decision d;
  d.task_type = h;
  d.prompt = p;
  d.action = a;
  d.thoughts = std::move(thoughts);
  return d;
}

}  // namespace

Decision forward_policy(TaskType h_gt, const std::string& p_gt) {
  return base_decision(h_gt, p_gt, Action::move_forward, "pressing forward");
}

Decision random_policy(TaskType h_gt, const std::string& p_gt, Rng& rng) {
  const Action a = static_cast<Action>(rng.uniform_int(0, sim::kNumActions - 1));
  return base_decision(h_gt, p_gt, a, "wandering");
}

Decision heuristic_policy(const PerceptSummary& current, int frame_width, int frame_height,
                          const HeuristicThresholds& thresholds, TaskType h_gt,
                          const std::string& p_gt) {
  std::ostringstream trace;
  if (!current.detected || current.confidence <= 0.0) {
    trace << "phase=search conf=" << current.confidence << "; rotating";
    return base_decision(h_gt, p_gt, Action::turn_right, trace.str());
  }

  const double third_w = frame_width / 3.0;
  const double third_h = frame_height / 3.0;
  trace << "phase=centering center=(" << current.center_px.x << "," << current.center_px.y
        << ") area=" << current.area_frac;
  if (current.center_px.x < third_w)
    return base_decision(h_gt, p_gt, Action::turn_left, trace.str());
  if (current.center_px.x > 2.0 * third_w)
    return base_decision(h_gt, p_gt, Action::turn_right, trace.str());
  if (current.center_px.y < third_h)
    return base_decision(h_gt, p_gt, Action::look_up, trace.str());
  if (current.center_px.y > 2.0 * third_h)
    return base_decision(h_gt, p_gt, Action::look_down, trace.str());

  if (current.area_frac < thresholds.area_threshold) {
    trace.str("");
    trace << "phase=approach area=" << current.area_frac << "<" << thresholds.area_threshold;
    return base_decision(h_gt, p_gt, Action::move_forward, trace.str());
  }
  trace.str("");
  trace << "phase=stop area=" << current.area_frac;
  return base_decision(h_gt, p_gt, Action::stop, trace.str());
}

Decision shortest_path_policy(const AgentState& state, const Scene& scene, int target_id,
                              double standoff_distance, TaskType h_gt, const std::string& p_gt) {
  const auto& target = scene.object_or_throw(target_id);
  const auto& g = scene.grid;
  const auto [cx, cz] = g.cell_of(state.pose.position.x, state.pose.position.z);

  auto turn_toward = [&](double desired_yaw) {
    const double err = wrap180(desired_yaw - state.pose.yaw_deg);
    return err > 0.0 ? Action::turn_right : Action::turn_left;
  };

  // BFS distance/parent field from the current cell.
  const size_t n = static_cast<size_t>(g.nx) * g.nz;
  std::vector<int32_t> parent(n, -2);  // -2 unreached, -1 root
  auto idx = [&](int x, int z) { return static_cast<size_t>(z) * g.nx + x; };
  if (g.navigable(cx, cz)) {
    std::queue<std::pair<int, int>> q;
    parent[idx(cx, cz)] = -1;
    q.push({cx, cz});
    while (!q.empty()) {
      auto [x, z] = q.front();
      q.pop();
      constexpr int dx[4] = {1, -1, 0, 0};
      constexpr int dz[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int nx2 = x + dx[k], nz2 = z + dz[k];
        if (g.navigable(nx2, nz2) && parent[idx(nx2, nz2)] == -2) {
          parent[idx(nx2, nz2)] = static_cast<int32_t>(idx(x, z));
          q.push({nx2, nz2});
        }
      }
    }
  }

  // Reachable cell whose center is closest to the standoff ring.
  int best = -1;
  double best_score = 1e300;
  for (int z = 0; z < g.nz; ++z) {
    for (int x = 0; x < g.nx; ++x) {
      if (parent[idx(x, z)] == -2) continue;
      const Vec2 c = g.center_of(x, z);
      const double dx = c.x - target.box.center.x;
      const double dz = c.y - target.box.center.z;
      const double score = std::abs(std::sqrt(dx * dx + dz * dz) - standoff_distance);
      if (score < best_score - 1e-12) {
        best_score = score;
        best = static_cast<int>(idx(x, z));
      }
    }
  }
  if (best < 0) {
    // Disconnected or spawned on a blocked cell: stop in place.
    return base_decision(h_gt, p_gt, Action::stop, "no reachable standoff cell");
  }

  if (best != static_cast<int>(idx(cx, cz))) {
    // Walk: first path cell after the root toward the goal.
    int32_t cur = static_cast<int32_t>(best);
    int32_t next = cur;
    while (parent[cur] != -1) {
      next = cur;
      cur = parent[cur];
    }
    const Vec2 wp = g.center_of(static_cast<int>(next % g.nx), static_cast<int>(next / g.nx));
    const double desired =
        geom::bearing_of(wp.x - state.pose.position.x, wp.y - state.pose.position.z);
    if (std::abs(wrap180(desired - state.pose.yaw_deg)) > kFacingToleranceDeg)
      return base_decision(h_gt, p_gt, turn_toward(desired), "steering to waypoint");
    return base_decision(h_gt, p_gt, Action::move_forward, "walking the path");
  }

  // Arrived: face the target center in yaw, then pitch, then stop.
  const double dx = target.box.center.x - state.pose.position.x;
  const double dz = target.box.center.z - state.pose.position.z;
  const double desired_yaw = geom::bearing_of(dx, dz);
  if (std::abs(wrap180(desired_yaw - state.pose.yaw_deg)) > kFacingToleranceDeg)
    return base_decision(h_gt, p_gt, turn_toward(desired_yaw), "facing target");

  const double horiz = std::sqrt(dx * dx + dz * dz);
  const double desired_pitch =
      rad2deg(std::atan2(target.box.center.y - state.pose.position.y, horiz));
  const double perr = desired_pitch - state.pose.pitch_deg;
  if (std::abs(perr) > kFacingToleranceDeg && std::abs(state.pose.pitch_deg) < 59.0)
    return base_decision(h_gt, p_gt, perr > 0 ? Action::look_up : Action::look_down,
                         "tilting to target");
  return base_decision(h_gt, p_gt, Action::stop, "standoff reached");
}

}  // namespace vantage::policy
