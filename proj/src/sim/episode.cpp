#include "vantage/sim/episode.hpp"

#include <algorithm>
#include <stdexcept>

#include "vantage/core/rng.hpp"

namespace vantage::sim {

const char* action_name(Action a) { return kActionNames[static_cast<int>(a)]; }

std::optional<Action> action_from_name(const std::string& name) {
  for (int i = 0; i < kNumActions; ++i)
    if (name == kActionNames[i]) return static_cast<Action>(i);
  return std::nullopt;
}

std::optional<EpisodeSpec> spawn_episode(const Scene& scene, uint64_t seed,
                                         const CameraConfig& cam, const SpawnConfig& cfg) {
  if (scene.objects.empty()) throw std::invalid_argument("spawn_episode: scene has no objects");
  Rng rng(mix_seed(seed, stream_tag("spawn")));

  std::vector<std::pair<int, int>> free_cells;
  for (int z = 0; z < scene.grid.nz; ++z)
    for (int x = 0; x < scene.grid.nx; ++x)
      if (scene.grid.navigable(x, z)) free_cells.push_back({x, z});
  if (free_cells.empty()) return std::nullopt;

  const uint64_t min_pixels = std::max<uint64_t>(
      1, static_cast<uint64_t>(cfg.min_visible_frame_fraction * static_cast<double>(cam.width) *
                               cam.height));

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const auto [cx, cz] = free_cells[rng.uniform_int(0, static_cast<int>(free_cells.size()) - 1)];
    const auto center = scene.grid.center_of(cx, cz);
    Pose pose{{center.x, cam.eye_height, center.y}, rng.uniform(0.0, 360.0), 0.0};
    pose = pose.normalized();

    const Observation obs = render::render(scene, pose, cam);
    std::vector<int> qualifying;
    for (const auto& obj : scene.objects) {
      if (render::id_stats(obs, obj.id).count >= min_pixels) qualifying.push_back(obj.id);
    }
    if (qualifying.empty()) continue;

    const int target = qualifying[rng.uniform_int(0, static_cast<int>(qualifying.size()) - 1)];
    const TaskType task = static_cast<TaskType>(rng.uniform_int(0, scene::kNumTaskTypes - 1));

    EpisodeSpec spec;
    spec.instruction = scene::synthesize_instruction(scene, target, task, mix_seed(seed, attempt));
    spec.start_pose = pose;
    spec.horizon = kDefaultHorizon;
    spec.seed = seed;
    return spec;
  }
  return std::nullopt;
}

AgentState step(const AgentState& state, const Scene& scene, Action action, int horizon) {
  if (state.done) throw std::logic_error("step: episode already done");

  AgentState next = state;
  switch (action) {
    case Action::move_forward: {
      const vantage::Vec2 h = geom::heading_xz(state.pose.yaw_deg);
      const double nx = state.pose.position.x + kForwardStepMeters * h.x;
      const double nz = state.pose.position.z + kForwardStepMeters * h.y;
      const auto [cx, cz] = scene.grid.cell_of(nx, nz);
      if (scene.grid.navigable(cx, cz)) {
        next.pose.position.x = nx;
        next.pose.position.z = nz;
      }
      break;
    }
    case Action::turn_left:
      next.pose.yaw_deg = wrap360(state.pose.yaw_deg - kTurnStepDeg);
      break;
    case Action::turn_right:
      next.pose.yaw_deg = wrap360(state.pose.yaw_deg + kTurnStepDeg);
      break;
    case Action::look_up:
      next.pose = Pose{state.pose.position, state.pose.yaw_deg, state.pose.pitch_deg + kTurnStepDeg}
                      .normalized();
      break;
    case Action::look_down:
      next.pose = Pose{state.pose.position, state.pose.yaw_deg, state.pose.pitch_deg - kTurnStepDeg}
                      .normalized();
      break;
    case Action::stop:
      next.done = true;
      next.done_reason = DoneReason::stopped;
      break;
  }
  next.step = state.step + 1;
  if (!next.done && next.step >= horizon) {
    next.done = true;
    next.done_reason = DoneReason::horizon;
  }
  return next;
}

}  // namespace vantage::sim
