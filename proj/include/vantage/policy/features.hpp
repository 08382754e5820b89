#pragma once

#include <array>
#include <optional>

#include "vantage/percept/emulator.hpp"
#include "vantage/policy/decision.hpp"

namespace vantage::policy {

/// Digest of one frame's perception, used by features, the heuristic and the
/// trajectory log. Derived entirely from the frozen module's output.
struct PerceptSummary {
  bool detected = false;
  double confidence = 0.0;
  double area_frac = 0.0;  // r_a of the prediction
  Vec2 center_px;          // prediction center, pixel coordinates
  Vec2 center_offset;      // (center - frame center) / frame size, in [-0.5,0.5]^2
  double area_px = 0.0;
};

PerceptSummary summarize(const percept::PerceptionOutput& out, const render::Observation& obs);

// [c_t, c_{t-1}, r_a, off_x, off_y, detected, step/T,
//  one-hot(last action, 6), one-hot(routed task, 3)]
inline constexpr int kFeatureDim = 7 + sim::kNumActions + scene::kNumTaskTypes;
using FeatureVector = std::array<double, kFeatureDim>;

/// Missing previous step copies the current confidence (c_{t-1} := c_t); a
/// missing last action leaves its one-hot all zero.
FeatureVector featurize(const PerceptSummary& current, const std::optional<PerceptSummary>& prev,
                        int steps_taken, int horizon, std::optional<Action> last_action,
                        TaskType routed);

}  // namespace vantage::policy
