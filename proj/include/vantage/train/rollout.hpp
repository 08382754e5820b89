#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vantage/percept/emulator.hpp"
#include "vantage/policy/baselines.hpp"
#include "vantage/policy/learned.hpp"
#include "vantage/reward/rewards.hpp"

namespace vantage::train {

enum class PolicyKind { ppm, forward, random, heuristic, shortest_path, learned };

const char* policy_kind_name(PolicyKind k);
std::optional<PolicyKind> policy_kind_from_name(const std::string& name);

/// Immutable world context shared by rollouts, training and evaluation.
struct WorldConfig {
  geom::CameraConfig cam;
  percept::EmulatorParams emu;
  percept::SegConfidenceWeights seg;
  reward::RewardWeights rewards;
  policy::HeuristicThresholds heuristic;
  double standoff_distance = 1.5;  // shortest-path goal ring, matches z*

  void validate() const {
    cam.validate();
    emu.validate();
    seg.validate();
    rewards.validate();
  }
};

/// One row of the trajectory log. Frame 0 is the initial observation and has
/// no decision or reward; every later row records the decision made on the
/// previous frame plus the perception and reward that followed it.
struct StepRecord {
  int frame = 0;
  geom::Pose pose;
  policy::PerceptSummary perception;
  std::optional<policy::Decision> decision;
  std::string raw_decision;
  std::optional<reward::RewardBreakdown> reward;
  policy::FeatureVector features{};
  bool has_features = false;
  std::vector<double> action_probs;   // learned rollouts only
};

struct EpisodeRun {
  sim::EpisodeSpec spec;
  scene::TaskType routed = scene::TaskType::grounding;
  std::vector<double> routing_probs;  // learned rollouts only
  std::vector<StepRecord> steps;
  percept::PerceptionOutput final_output;
  double episode_return = 0.0;
  int actions_taken = 0;
  sim::DoneReason done_reason = sim::DoneReason::none;
  double final_confidence = 0.0;
  double final_g = 0.0;

  bool misrouted() const { return routed != spec.instruction.task_type_gt; }
};

struct RolloutPolicy {
  PolicyKind kind = PolicyKind::heuristic;
  const policy::PolicyParams* params = nullptr;  // learned only
  double temperature = 0.0;
};

/// Runs one episode to termination. Perception seeds depend only on
/// (episode seed, frame index), so stochastic-policy rollouts from the same
/// spec differ only in policy sampling.
EpisodeRun run_episode(const scene::Scene& scene, const sim::EpisodeSpec& spec,
                       const WorldConfig& world, const RolloutPolicy& pol, uint64_t policy_seed);

}  // namespace vantage::train
