#include "vantage/reward/rewards.hpp"

#include <json.hpp>

#include "vantage/sim/episode.hpp"

namespace vantage::reward {

double format_reward(const std::string& raw_output) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(raw_output);
  } catch (const json::parse_error&) {
    return -kFormatBonus;
  }
  if (!j.is_object()) return -kFormatBonus;

  static const char* kKeys[] = {"thoughts", "task_type", "prompt", "action"};
  for (const char* k : kKeys)
    if (!j.contains(k)) return -kFormatBonus;
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known |= (key == k);
    if (!known) return -kFormatBonus;
  }

  if (!j["thoughts"].is_object()) return -kFormatBonus;
  if (!j["task_type"].is_string() ||
      !scene::task_type_from_name(j["task_type"].get<std::string>()))
    return -kFormatBonus;
  if (!j["prompt"].is_string()) return -kFormatBonus;

  const auto& action = j["action"];
  if (!action.is_object() || action.size() != 1) return -kFormatBonus;
  const std::string name = action.begin().key();
  if (!sim::action_from_name(name)) return -kFormatBonus;
  return kFormatBonus;
}

double confidence_reward(double c_t, double c_prev) {
  if (c_t < 0.0 || c_t > 1.0 || c_prev < 0.0 || c_prev > 1.0)
    throw std::invalid_argument("confidence_reward: confidence outside [0,1]");
  return c_t - c_prev;
}

double area_reward(const std::optional<GeomSnapshot>& snap) {
  if (!snap) return 0.0;
  if (snap->frame_area <= 0.0) throw std::invalid_argument("area_reward: empty frame");
  return snap->predicted_region_area / snap->frame_area;
}

double center_reward(const std::optional<GeomSnapshot>& snap) {
  if (!snap) return 0.0;
  if (snap->frame_area <= 0.0) throw std::invalid_argument("center_reward: empty frame");
  const double w = snap->frame_center.x * 2.0;
  const double h = snap->frame_center.y * 2.0;
  const double dx = (snap->predicted_center.x - snap->frame_center.x) / w;
  const double dy = (snap->predicted_center.y - snap->frame_center.y) / h;
  const double d = std::sqrt(dx * dx + dy * dy) / std::sqrt(2.0);
  return 1.0 - d;
}

double geometric_score(const std::optional<GeomSnapshot>& snap, const RewardWeights& weights) {
  weights.validate();
  return weights.mu1 * area_reward(snap) + weights.mu2 * center_reward(snap);
}

double geometric_reward(double g_t, double g_prev) { return g_t - g_prev; }

double total_reward(scene::TaskType h, scene::TaskType h_gt, double r_f, double r_c, double r_g,
                    const RewardWeights& weights) {
  weights.validate();
  if (h != h_gt) return kMisroutePenalty;
  return r_f + weights.lambda1 * r_c + weights.lambda2 * r_g;
}

RewardBreakdown step_breakdown(const std::string& raw_decision, scene::TaskType h,
                               scene::TaskType h_gt, double c_t, double c_prev,
                               const std::optional<GeomSnapshot>& snap_t, double g_prev,
                               const RewardWeights& weights) {
  RewardBreakdown b;
  b.r_f = format_reward(raw_decision);
  b.r_c = confidence_reward(c_t, c_prev);
  b.r_a = area_reward(snap_t);
  b.r_u = center_reward(snap_t);
  b.g = geometric_score(snap_t, weights);
  b.r_g = geometric_reward(b.g, g_prev);
  b.misroute = h != h_gt;
  b.total = total_reward(h, h_gt, b.r_f, b.r_c, b.r_g, weights);
  return b;
}

}  // namespace vantage::reward
