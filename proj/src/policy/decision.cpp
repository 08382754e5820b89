#include "vantage/policy/decision.hpp"

#include <json.hpp>

namespace vantage::policy {

std::string decision_to_json(const Decision& d) {
  nlohmann::ordered_json j;
  j["thoughts"] = {{"text", d.thoughts}};
  j["task_type"] = scene::task_type_name(d.task_type);
  j["prompt"] = d.prompt;
  j["action"] = {{sim::action_name(d.action), nlohmann::ordered_json::object()}};
  return j.dump();
}

std::optional<Decision> decision_from_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
  if (!j.is_object() || !j.contains("thoughts") || !j.contains("task_type") ||
      !j.contains("prompt") || !j.contains("action"))
    return std::nullopt;
  if (!j["thoughts"].is_object() || !j["action"].is_object() || j["action"].size() != 1)
    return std::nullopt;

  Decision d;
  if (j["thoughts"].contains("text") && j["thoughts"]["text"].is_string())
    d.thoughts = j["thoughts"]["text"].get<std::string>();
  const auto task = scene::task_type_from_name(j["task_type"].get<std::string>());
  const auto action = sim::action_from_name(j["action"].begin().key());
  if (!task || !action || !j["prompt"].is_string()) return std::nullopt;
  d.task_type = *task;
  d.prompt = j["prompt"].get<std::string>();
  d.action = *action;
  return d;
}

}  // namespace vantage::policy
