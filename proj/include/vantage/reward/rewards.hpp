#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "vantage/core/math.hpp"
#include "vantage/scene/scene.hpp"

namespace vantage::reward {

inline constexpr double kFormatBonus = 0.05;
inline constexpr double kMisroutePenalty = -1.0;

struct RewardWeights {
  double lambda1 = 0.5;  // confidence term
  double lambda2 = 0.5;  // geometric term
  double mu1 = 0.5;      // area inside g
  double mu2 = 0.5;      // center inside g

  void validate() const {
    const auto pair_ok = [](double a, double b) {
      return a >= 0.0 && b >= 0.0 && std::abs(a + b - 1.0) <= 1e-9;
    };
    if (!pair_ok(lambda1, lambda2))
      throw std::invalid_argument("RewardWeights: lambda1 + lambda2 must be 1, both >= 0");
    if (!pair_ok(mu1, mu2))
      throw std::invalid_argument("RewardWeights: mu1 + mu2 must be 1, both >= 0");
  }
};

/// Geometry of one prediction against its frame; absence of a prediction is
/// modeled by an absent optional at the call sites.
struct GeomSnapshot {
  double predicted_region_area = 0.0;  // pixels, clipped to the frame
  double frame_area = 0.0;             // pixels
  Vec2 predicted_center;               // pixel coordinates, inside the frame
  Vec2 frame_center;
};

struct RewardBreakdown {
  double r_f = 0.0;
  double r_c = 0.0;
  double r_a = 0.0;
  double r_u = 0.0;
  double g = 0.0;    // geometric score at this step
  double r_g = 0.0;  // geometric score delta
  bool misroute = false;
  double total = 0.0;
};

/// +0.05 iff the raw text parses as the decision schema: a "thoughts" object,
/// a valid task_type, a string prompt, and an "action" object holding exactly
/// one known action; -0.05 otherwise.
double format_reward(const std::string& raw_output);

/// c_t - c_{t-1}; inputs must be in [0,1].
double confidence_reward(double c_t, double c_prev);

/// A(prediction)/A(frame); 0 for an absent prediction.
double area_reward(const std::optional<GeomSnapshot>& snap);

/// 1 - d with d the Euclidean distance of frame-normalized centers divided by
/// sqrt(2); 0 for an absent prediction.
double center_reward(const std::optional<GeomSnapshot>& snap);

/// g = mu1*r_a + mu2*r_u.
double geometric_score(const std::optional<GeomSnapshot>& snap, const RewardWeights& weights);

/// g_t - g_{t-1}.
double geometric_reward(double g_t, double g_prev);

/// -1 on task-type misroute, otherwise r_f + lambda1*r_c + lambda2*r_g.
double total_reward(scene::TaskType h, scene::TaskType h_gt, double r_f, double r_c, double r_g,
                    const RewardWeights& weights);

/// Assembles the per-step breakdown from the raw decision text, the routed
/// and ground-truth task types, and consecutive (confidence, snapshot) pairs.
RewardBreakdown step_breakdown(const std::string& raw_decision, scene::TaskType h,
                               scene::TaskType h_gt, double c_t, double c_prev,
                               const std::optional<GeomSnapshot>& snap_t, double g_prev,
                               const RewardWeights& weights);

}  // namespace vantage::reward
