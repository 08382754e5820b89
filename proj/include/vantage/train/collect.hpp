#pragma once

#include "vantage/train/rollout.hpp"

namespace vantage::train {

struct CollectResult {
  std::vector<EpisodeRun> episodes;
  int spawn_failures = 0;
};

/// Heuristic trajectory collection for behavior cloning: spawns episodes
/// round-robin over the scenes, runs the heuristic with ground-truth
/// (h_I, p_I), and logs every step. Deterministic per seed. Spawn failures
/// are skipped and counted.
CollectResult collect_heuristic(const std::vector<scene::Scene>& scenes, int n_episodes,
                                uint64_t seed, const WorldConfig& world);

/// Same collection loop for an arbitrary policy; used by evaluation.
CollectResult collect_policy(const std::vector<scene::Scene>& scenes, int n_episodes,
                             uint64_t seed, const WorldConfig& world, const RolloutPolicy& pol,
                             int jobs = 1);

}  // namespace vantage::train
