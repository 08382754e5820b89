#include "vantage/policy/features.hpp"

namespace vantage::policy {

PerceptSummary summarize(const percept::PerceptionOutput& out, const render::Observation& obs) {
  PerceptSummary s;
  s.confidence = out.confidence;
  const auto snap = percept::snapshot_of(out, obs);
  if (!snap) return s;
  s.detected = true;
  s.area_px = snap->predicted_region_area;
  s.area_frac = snap->predicted_region_area / snap->frame_area;
  s.center_px = snap->predicted_center;
  s.center_offset = {(snap->predicted_center.x - snap->frame_center.x) / obs.width,
                     (snap->predicted_center.y - snap->frame_center.y) / obs.height};
  return s;
}

FeatureVector featurize(const PerceptSummary& current, const std::optional<PerceptSummary>& prev,
                        int steps_taken, int horizon, std::optional<Action> last_action,
                        TaskType routed) {
  FeatureVector f{};
  f[0] = current.confidence;
  f[1] = prev ? prev->confidence : current.confidence;
  f[2] = current.area_frac;
  f[3] = current.center_offset.x;
  f[4] = current.center_offset.y;
  f[5] = current.detected ? 1.0 : 0.0;
  f[6] = horizon > 0 ? static_cast<double>(steps_taken) / horizon : 0.0;
  if (last_action) f[7 + static_cast<int>(*last_action)] = 1.0;
  f[7 + sim::kNumActions + static_cast<int>(routed)] = 1.0;
  return f;
}

}  // namespace vantage::policy
