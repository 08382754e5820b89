#pragma once

#include "vantage/policy/features.hpp"
#include "vantage/scene/pathfind.hpp"

namespace vantage::policy {

using scene::Scene;
using sim::AgentState;

/// Always move_forward; ground-truth task routing (baselines receive h_I, p_I).
Decision forward_policy(TaskType h_gt, const std::string& p_gt);

/// Uniform over the full action set (stop included at probability 1/6).
Decision random_policy(TaskType h_gt, const std::string& p_gt, Rng& rng);

struct HeuristicThresholds {
  double area_threshold = 0.08;  // r_a at which approach ends
};

/// Search / Centering / Approach phases:
///  - no detection -> turn_right until something is found;
///  - prediction center outside the middle cell of the 3x3 grid -> the one
///    turn/look that re-centers it, horizontal before vertical;
///  - centered but small -> move_forward; otherwise stop.
Decision heuristic_policy(const PerceptSummary& current, int frame_width, int frame_height,
                          const HeuristicThresholds& thresholds, TaskType h_gt,
                          const std::string& p_gt);

/// Oracle baseline: walks the A* path to the navigable cell closest to the
/// standoff distance from the target, then faces the target and stops.
Decision shortest_path_policy(const AgentState& state, const Scene& scene, int target_id,
                              double standoff_distance, TaskType h_gt, const std::string& p_gt);

}  // namespace vantage::policy
