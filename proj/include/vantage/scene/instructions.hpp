#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vantage/scene/scene.hpp"

namespace vantage::scene {

/// Template grammar: "{verb} the {attrs} {class} [next to the {landmark}]"
/// with verbs locate / segment / "estimate the 3d box of". The filled noun
/// phrase is the ground-truth prompt p_I.
Instruction synthesize_instruction(const Scene& scene, int target_id, TaskType task_type,
                                   uint64_t seed);

struct ParsedInstruction {
  TaskType task_type = TaskType::grounding;
  std::string prompt;
  bool exact = true;  // false when only keyword matching succeeded
};

/// Inverse of synthesize_instruction on grammar outputs; keyword fallback on
/// off-grammar text. Absent when no task verb is recognizable.
std::optional<ParsedInstruction> parse_instruction(const std::string& text);

}  // namespace vantage::scene
