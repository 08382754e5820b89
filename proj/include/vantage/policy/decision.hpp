#pragma once

#include <optional>
#include <string>

#include "vantage/sim/episode.hpp"

namespace vantage::policy {

using scene::TaskType;
using sim::Action;

/// Structured policy output. Serializes to the exact schema format_reward
/// validates: {"thoughts":{...},"task_type":...,"prompt":...,"action":{name:{}}}
/// with exactly one action key. Thoughts are logged, never learned.
struct Decision {
  std::string thoughts;
  TaskType task_type = TaskType::grounding;
  std::string prompt;
  Action action = Action::stop;
};

std::string decision_to_json(const Decision& d);
std::optional<Decision> decision_from_json(const std::string& text);

}  // namespace vantage::policy
