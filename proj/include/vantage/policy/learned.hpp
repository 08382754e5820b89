#pragma once

#include "vantage/policy/net.hpp"
#include "vantage/scene/instructions.hpp"

namespace vantage::policy {

struct LearnedStep {
  Decision decision;
  std::vector<double> action_probs;           // full distribution, recorded for GRPO
  std::vector<double> routing_probs;          // nonempty only when routing happened here
  TaskType routed = TaskType::grounding;
};

/// Compact parametric stand-in for the VLM controller. At the first step of
/// an episode (routed_already absent) the task type is sampled from the
/// routing head's temperature softmax and then frozen; the prompt comes from
/// parse_instruction. Every step samples an action from the action head.
/// Temperature 0 is greedy.
LearnedStep learned_policy(const std::string& instruction_text, const FeatureVector& features,
                           const PolicyParams& params, double temperature, uint64_t seed,
                           std::optional<TaskType> routed_already);

}  // namespace vantage::policy
