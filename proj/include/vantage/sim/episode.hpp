#pragma once

#include <array>
#include <optional>

#include "vantage/render/renderer.hpp"
#include "vantage/scene/instructions.hpp"

namespace vantage::sim {

using geom::CameraConfig;
using geom::Pose;
using render::Observation;
using scene::Instruction;
using scene::Scene;
using scene::TaskType;

enum class Action { move_forward, turn_left, turn_right, look_up, look_down, stop };
inline constexpr int kNumActions = 6;
inline constexpr std::array<const char*, 6> kActionNames = {
    "move_forward", "turn_left", "turn_right", "look_up", "look_down", "stop"};

const char* action_name(Action a);
std::optional<Action> action_from_name(const std::string& name);

inline constexpr double kForwardStepMeters = 0.25;
inline constexpr double kTurnStepDeg = 10.0;
inline constexpr int kDefaultHorizon = 10;

enum class DoneReason { none, stopped, horizon };

struct AgentState {
  Pose pose;
  int step = 0;
  bool done = false;
  DoneReason done_reason = DoneReason::none;
};

struct EpisodeSpec {
  Instruction instruction;
  Pose start_pose;
  int horizon = kDefaultHorizon;
  uint64_t seed = 0;
};

struct SpawnConfig {
  double min_visible_frame_fraction = 0.01;  // target pixels vs frame pixels at spawn
  int max_attempts = 200;
};

/// Samples a navigable start pose at eye height and a target that is at
/// least partially in view above the visible-area threshold; task type drawn
/// uniformly. Absent when no (pose, target) pair passes within the retry
/// bound (caller skips the scene).
std::optional<EpisodeSpec> spawn_episode(const Scene& scene, uint64_t seed,
                                         const CameraConfig& cam,
                                         const SpawnConfig& cfg = SpawnConfig{});

/// Applies one action. move_forward is blocked (pose unchanged) when the
/// destination cell is non-navigable; blocked steps still consume budget.
/// Throws when the state is already done.
AgentState step(const AgentState& state, const Scene& scene, Action action, int horizon);

inline Observation observe(const AgentState& state, const Scene& scene, const CameraConfig& cam) {
  return render::render(scene, state.pose, cam);
}

}  // namespace vantage::sim
