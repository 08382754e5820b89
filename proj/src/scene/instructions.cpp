#include "vantage/scene/instructions.hpp"

#include <stdexcept>

#include "vantage/core/rng.hpp"

namespace vantage::scene {

namespace {

const char* verb_for(TaskType t) {
  switch (t) {
    case TaskType::grounding: return "locate";
    case TaskType::segmentation: return "segment";
    case TaskType::box3d: return "estimate the 3d box of";
  }
  return "?";
}

}  // namespace

Instruction synthesize_instruction(const Scene& scene, int target_id, TaskType task_type,
                                   uint64_t seed) {
  const SceneObject& obj = scene.object_or_throw(target_id);
  Rng rng(mix_seed(seed, stream_tag("instruction"), static_cast<uint64_t>(target_id)));

  std::string phrase;
  for (const auto& a : obj.attributes) phrase += a + " ";
  phrase += obj.class_name;
  if (obj.nearest_landmark_id && rng.bernoulli(0.5)) {
    phrase += " next to the " + scene.object_or_throw(*obj.nearest_landmark_id).class_name;
  }

  Instruction ins;
  ins.task_type_gt = task_type;
  ins.description_gt = phrase;
  ins.target_id = target_id;
  ins.text = std::string(verb_for(task_type)) + " the " + phrase;
  return ins;
}

std::optional<ParsedInstruction> parse_instruction(const std::string& text) {
  struct VerbRule {
    const char* prefix;
    TaskType type;
  };
  static const VerbRule rules[] = {
      {"locate the ", TaskType::grounding},
      {"segment the ", TaskType::segmentation},
      {"estimate the 3d box of the ", TaskType::box3d},
  };
  for (const auto& r : rules) {
    const std::string prefix(r.prefix);
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
      return ParsedInstruction{r.type, text.substr(prefix.size()), true};
    }
  }

  // Off-grammar fallback: keyword matching, flagged as inexact.
  auto contains = [&](const char* kw) { return text.find(kw) != std::string::npos; };
  std::optional<TaskType> t;
  if (contains("segment")) t = TaskType::segmentation;
  else if (contains("3d box") || contains("estimate")) t = TaskType::box3d;
  else if (contains("locate") || contains("find") || contains("ground")) t = TaskType::grounding;
  if (!t) return std::nullopt;

  std::string prompt = text;
  const size_t the = text.rfind("the ");
  if (the != std::string::npos && the + 4 < text.size()) prompt = text.substr(the + 4);
  return ParsedInstruction{*t, prompt, false};
}

}  // namespace vantage::scene
