#pragma once

#include <optional>
#include <string>

#include "vantage/render/renderer.hpp"
#include "vantage/reward/rewards.hpp"
#include "vantage/scene/scene.hpp"

// Frozen-perception stand-ins behind the paper-style unified interface:
// (observation, prompt) -> (prediction, confidence). The emulators may read
// scene ground truth internally; callers only ever see the output pair. An
// internal informativeness scalar s summarizes how favorable the viewpoint is
// and drives both output quality and confidence, so confidence is a
// directional signal of viewpoint quality by construction.

namespace vantage::percept {

using geom::Box2D;
using geom::Mask;
using geom::OrientedBox3D;
using render::Observation;
using render::VisibilityStats;
using scene::Scene;
using scene::TaskType;

enum class PredictionKind { none, box2d, mask, box3d };

struct PerceptionOutput {
  PredictionKind kind = PredictionKind::none;
  Box2D box;            // valid when kind == box2d
  Mask mask;            // valid when kind == mask
  OrientedBox3D box3;   // valid when kind == box3d
  double confidence = 0.0;
  TaskType module = TaskType::grounding;
  bool unresolvable_prompt = false;  // open-vocabulary miss diagnostic

  bool detected() const { return kind != PredictionKind::none; }
};

struct EmulatorParams {
  double noise_std = 0.05;        // confidence jitter sigma
  double detect_floor = 20.0;     // min visible pixels at 128x128, scales with area
  double preferred_distance = 1.5;  // z*, meters
  double distance_band = 3.0;       // meters
  double w_visible = 0.5;
  double w_center = 0.25;
  double w_distance = 0.25;
  double box_corruption_gain = 0.3;
  double mask_corruption_gain = 4.0;  // boundary band width in px at 128, times (1-s)

  void validate() const;
};

struct SegConfidenceWeights {
  double mu3 = 0.5;
  double mu4 = 0.5;
  void validate() const;
};

/// Viewpoint informativeness in [0,1]:
///   s = w_v*visible_fraction + w_e*(1 - 2*|center_offset|/sqrt(2))
///     + w_z*clamp(1 - |depth - z*|/band, 0, 1)
double informativeness(const VisibilityStats& stats, double depth_to_target,
                       const EmulatorParams& params);

/// Resolves a grammar prompt ("red chair [next to the table]") to exactly one
/// object id; absent when no object or several objects match.
std::optional<int> resolve_prompt(const Scene& scene, const std::string& prompt);

/// GroundingDINO stand-in: tight visible-pixel box, corrupted by (1-s)-scaled
/// jitter, confidence clamp(s + N(0,sigma)).
PerceptionOutput ground(const Observation& obs, const std::string& prompt, const Scene& scene,
                        const EmulatorParams& params, uint64_t rng_seed);

struct SegmentResult {
  PerceptionOutput output;   // mask prediction, combined confidence
  double detector_conf = 0.0;
  double mask_conf = 0.0;
};

/// Detector + mask stand-in: ground first, then the ground-truth instance
/// mask inside the detected box with a corrupted boundary band;
/// c_seg = mu3*c_det + mu4*c_mask.
SegmentResult segment(const Observation& obs, const std::string& prompt, const Scene& scene,
                      const EmulatorParams& params, const SegConfidenceWeights& weights,
                      uint64_t rng_seed);

/// Oriented-box estimator: back-projects masked depth, drops depth outliers
/// beyond 3x the median absolute deviation, fits a minimum-area footprint box
/// and aggregates five confidence signals by arithmetic mean.
PerceptionOutput estimate_box3d(const Observation& obs, const Mask& mask, double detector_conf,
                                double mask_conf, const EmulatorParams& params);

/// Unified dispatch; box3d chains ground -> segment -> estimate_box3d.
PerceptionOutput perceive(TaskType module, const Observation& obs, const std::string& prompt,
                          const Scene& scene, const EmulatorParams& params,
                          const SegConfidenceWeights& weights, uint64_t rng_seed);

/// Geometric summary of a prediction against its frame, used by the reward
/// arithmetic and the feature extractor. Absent when there is no prediction
/// or a 3D box cannot be projected.
std::optional<reward::GeomSnapshot> snapshot_of(const PerceptionOutput& out,
                                                const Observation& obs);

}  // namespace vantage::percept
