#include "vantage/train/rollout.hpp"

namespace vantage::train {

using policy::Decision;
using policy::FeatureVector;
using policy::PerceptSummary;
using scene::TaskType;
using sim::Action;
using sim::AgentState;

const char* policy_kind_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::ppm: return "ppm";
    case PolicyKind::forward: return "forward";
    case PolicyKind::random: return "random";
    case PolicyKind::heuristic: return "heuristic";
    case PolicyKind::shortest_path: return "shortest_path";
    case PolicyKind::learned: return "learned";
  }
  return "?";
}

std::optional<PolicyKind> policy_kind_from_name(const std::string& name) {
  for (PolicyKind k : {PolicyKind::ppm, PolicyKind::forward, PolicyKind::random,
                       PolicyKind::heuristic, PolicyKind::shortest_path, PolicyKind::learned})
    if (name == policy_kind_name(k)) return k;
  return std::nullopt;
}

EpisodeRun run_episode(const scene::Scene& scene, const sim::EpisodeSpec& spec,
                       const WorldConfig& world, const RolloutPolicy& pol, uint64_t policy_seed) {
  if (pol.kind == PolicyKind::learned && !pol.params)
    throw std::invalid_argument("run_episode: learned policy needs parameters");

  EpisodeRun run;
  run.spec = spec;
  const auto& instr = spec.instruction;

  // Routing: baselines receive the ground-truth task type and prompt; the
  // learned policy routes from the instruction text before the first frame
  // is perceived, then stays frozen for the episode.
  std::string prompt = instr.description_gt;
  run.routed = instr.task_type_gt;
  if (pol.kind == PolicyKind::learned) {
    const auto bag = pol.params->routing.encode(instr.text);
    run.routing_probs = policy::softmax(pol.params->routing.forward(bag), pol.temperature);
    Rng route_rng(mix_seed(policy_seed, stream_tag("route")));
    run.routed = static_cast<TaskType>(policy::sample_index(run.routing_probs, route_rng));
    const auto parsed = scene::parse_instruction(instr.text);
    prompt = parsed ? parsed->prompt : instr.text;
  }

  AgentState state;
  state.pose = spec.start_pose;

  auto perceive_frame = [&](const render::Observation& obs, int frame) {
    return percept::perceive(run.routed, obs, prompt, scene, world.emu, world.seg,
                             mix_seed(spec.seed, stream_tag("perception"), frame));
  };

  render::Observation obs = sim::observe(state, scene, world.cam);
  percept::PerceptionOutput output = perceive_frame(obs, 0);
  PerceptSummary summary = policy::summarize(output, obs);

  StepRecord first;
  first.frame = 0;
  first.pose = state.pose;
  first.perception = summary;
  run.steps.push_back(first);

  run.final_output = output;
  run.final_confidence = output.confidence;
  run.final_g = reward::geometric_score(percept::snapshot_of(output, obs), world.rewards);

  if (pol.kind == PolicyKind::ppm) {
    run.done_reason = sim::DoneReason::stopped;  // scored on the first frame, no motion
    return run;
  }

  Rng random_rng(mix_seed(policy_seed, stream_tag("random-policy")));
  double c_prev = output.confidence;
  double g_prev = run.final_g;
  auto snap0 = percept::snapshot_of(output, obs);
  double ra_prev = reward::area_reward(snap0);
  double ru_prev = reward::center_reward(snap0);
  std::optional<PerceptSummary> prev_summary;
  std::optional<Action> last_action;

  for (int t = 1; !state.done; ++t) {
    const FeatureVector feats =
        policy::featurize(summary, prev_summary, t - 1, spec.horizon, last_action, run.routed);

    StepRecord rec;
    rec.frame = t;
    rec.features = feats;
    rec.has_features = true;

    Decision decision;
    switch (pol.kind) {
      case PolicyKind::forward:
        decision = policy::forward_policy(instr.task_type_gt, instr.description_gt);
        break;
      case PolicyKind::random:
        decision = policy::random_policy(instr.task_type_gt, instr.description_gt, random_rng);
        break;
      case PolicyKind::heuristic:
        decision = policy::heuristic_policy(summary, world.cam.width, world.cam.height,
                                            world.heuristic, instr.task_type_gt,
                                            instr.description_gt);
        break;
      case PolicyKind::shortest_path:
        decision = policy::shortest_path_policy(state, scene, instr.target_id,
                                                world.standoff_distance, instr.task_type_gt,
                                                instr.description_gt);
        break;
      case PolicyKind::learned: {
        const auto ls = policy::learned_policy(instr.text, feats, *pol.params, pol.temperature,
                                               mix_seed(policy_seed, stream_tag("act"), t),
                                               run.routed);
        decision = ls.decision;
        rec.action_probs = ls.action_probs;
        break;
      }
      case PolicyKind::ppm:
        break;  // unreachable
    }

    rec.raw_decision = policy::decision_to_json(decision);
    rec.decision = decision;
    state = sim::step(state, scene, decision.action, spec.horizon);
    rec.pose = state.pose;
    ++run.actions_taken;

    double c_t = c_prev;
    std::optional<reward::GeomSnapshot> snap_t;
    if (decision.action == Action::stop) {
      // No new frame after stop: confidence and geometric score carry over,
      // so both deltas are zero and only the format term is earned.
      rec.perception = summary;
      reward::RewardBreakdown b;
      b.r_f = reward::format_reward(rec.raw_decision);
      b.r_c = 0.0;
      b.r_a = ra_prev;
      b.r_u = ru_prev;
      b.g = g_prev;
      b.r_g = 0.0;
      b.misroute = run.routed != instr.task_type_gt;
      b.total = reward::total_reward(run.routed, instr.task_type_gt, b.r_f, b.r_c, b.r_g,
                                     world.rewards);
      rec.reward = b;
    } else {
      obs = sim::observe(state, scene, world.cam);
      output = perceive_frame(obs, t);
      summary = policy::summarize(output, obs);
      snap_t = percept::snapshot_of(output, obs);
      c_t = output.confidence;
      rec.perception = summary;
      rec.reward = reward::step_breakdown(rec.raw_decision, run.routed, instr.task_type_gt, c_t,
                                          c_prev, snap_t, g_prev, world.rewards);
      prev_summary = run.steps.back().perception;
      run.final_output = output;
      run.final_confidence = c_t;
      run.final_g = rec.reward->g;
      c_prev = c_t;
      g_prev = rec.reward->g;
      ra_prev = rec.reward->r_a;
      ru_prev = rec.reward->r_u;
    }

    run.episode_return += rec.reward->total;
    last_action = decision.action;
    run.steps.push_back(std::move(rec));
  }

  run.done_reason = state.done_reason;
  return run;
}

}  // namespace vantage::train
