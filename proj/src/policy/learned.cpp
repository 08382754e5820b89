#include "vantage/policy/learned.hpp"

#include <sstream>

namespace vantage::policy {

LearnedStep learned_policy(const std::string& instruction_text, const FeatureVector& features,
                           const PolicyParams& params, double temperature, uint64_t seed,
                           std::optional<TaskType> routed_already) {
  Rng rng(mix_seed(seed, stream_tag("learned-policy")));
  LearnedStep out;

  if (routed_already) {
    out.routed = *routed_already;
  } else {
    const auto bag = params.routing.encode(instruction_text);
    out.routing_probs = softmax(params.routing.forward(bag), temperature);
    out.routed = static_cast<TaskType>(sample_index(out.routing_probs, rng));
  }

  out.action_probs = softmax(params.action.forward(features, nullptr), temperature);
  const Action action = static_cast<Action>(sample_index(out.action_probs, rng));

  const auto parsed = scene::parse_instruction(instruction_text);
  std::ostringstream thoughts;
  thoughts << "conf=" << features[0] << " area=" << features[2] << " step=" << features[6];

  out.decision.task_type = out.routed;
  out.decision.prompt = parsed ? parsed->prompt : instruction_text;
  out.decision.action = action;
  out.decision.thoughts = thoughts.str();
  return out;
}

}  // namespace vantage::policy
