#include "vantage/percept/emulator.hpp"

#include <algorithm>
#include <sstream>

#include "vantage/core/rng.hpp"
#include "vantage/geom/camera.hpp"
#include "vantage/geom/obb_fit.hpp"
#include "vantage/geom/poly2.hpp"

namespace vantage::percept {

namespace {

constexpr double kPointTarget = 200.0;   // cloud size that saturates g_count
constexpr double kDepthMadScale = 0.25;  // meters of MAD that zero g_depth

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

double scaled_detect_floor(const EmulatorParams& p, const Observation& obs) {
  return p.detect_floor * (static_cast<double>(obs.width) * obs.height) / (128.0 * 128.0);
}

std::optional<Box2D> tight_visible_box(const Observation& obs, int32_t id) {
  int min_x = obs.width, max_x = -1, min_y = obs.height, max_y = -1;
  for (int y = 0; y < obs.height; ++y) {
    const int32_t* row = obs.instance.data() + static_cast<size_t>(y) * obs.width;
    for (int x = 0; x < obs.width; ++x) {
      if (row[x] != id) continue;
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (max_x < 0) return std::nullopt;
  return Box2D{static_cast<double>(min_x), static_cast<double>(min_y),
               static_cast<double>(max_x + 1), static_cast<double>(max_y + 1)};
}

struct GroundInternal {
  PerceptionOutput out;
  int target_id = 0;
  double s = 0.0;
};

GroundInternal ground_internal(const Observation& obs, const std::string& prompt,
                               const Scene& scene, const EmulatorParams& params,
                               uint64_t rng_seed) {
  params.validate();
  GroundInternal g;
  g.out.module = TaskType::grounding;

  const auto target = resolve_prompt(scene, prompt);
  if (!target) {
    g.out.unresolvable_prompt = true;
    return g;
  }
  g.target_id = *target;

  const VisibilityStats stats = render::visibility_in(obs, scene, *target);
  if (static_cast<double>(stats.visible_pixels) < scaled_detect_floor(params, obs)) return g;

  const auto& box3 = scene.object_or_throw(*target).box;
  const double depth = norm(box3.center - obs.pose.position);
  const double s = informativeness(stats, depth, params);
  g.s = s;

  const auto tight = tight_visible_box(obs, *target);
  if (!tight) return g;

  Rng rng(mix_seed(rng_seed, stream_tag("ground")));
  const double sigma_geo = (1.0 - s) * params.box_corruption_gain;
  double cx = tight->center().x + rng.normal(0.0, sigma_geo * tight->width());
  double cy = tight->center().y + rng.normal(0.0, sigma_geo * tight->height());
  double w = tight->width() * std::exp(rng.normal(0.0, sigma_geo * 0.5));
  double h = tight->height() * std::exp(rng.normal(0.0, sigma_geo * 0.5));
  const Box2D noisy{cx - w * 0.5, cy - h * 0.5, cx + w * 0.5, cy + h * 0.5};

  g.out.kind = PredictionKind::box2d;
  g.out.box = noisy.clipped(obs.width, obs.height);
  g.out.confidence = clamp01(s + rng.normal(0.0, params.noise_std));
  return g;
}

Mask erode4(const Mask& m) {
  Mask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      if (!m.at(x, y)) continue;
      const bool keep = x > 0 && x + 1 < m.width && y > 0 && y + 1 < m.height &&
                        m.at(x - 1, y) && m.at(x + 1, y) && m.at(x, y - 1) && m.at(x, y + 1);
      out.set(x, y, keep);
    }
  }
  return out;
}

Mask dilate4(const Mask& m) {
  Mask out = m;
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      if (!m.at(x, y)) continue;
      if (x > 0) out.set(x - 1, y, 1);
      if (x + 1 < m.width) out.set(x + 1, y, 1);
      if (y > 0) out.set(x, y - 1, 1);
      if (y + 1 < m.height) out.set(x, y + 1, 1);
    }
  }
  return out;
}

}  // namespace

void EmulatorParams::validate() const {
  if (noise_std < 0.0) throw std::invalid_argument("EmulatorParams: noise_std < 0");
  if (w_visible < 0.0 || w_center < 0.0 || w_distance < 0.0 ||
      std::abs(w_visible + w_center + w_distance - 1.0) > 1e-9)
    throw std::invalid_argument("EmulatorParams: informativeness weights must be >= 0, sum 1");
  if (detect_floor < 0.0 || preferred_distance <= 0.0 || distance_band <= 0.0)
    throw std::invalid_argument("EmulatorParams: bad detection/distance parameters");
  if (box_corruption_gain < 0.0 || mask_corruption_gain < 0.0)
    throw std::invalid_argument("EmulatorParams: corruption gains must be >= 0");
}

void SegConfidenceWeights::validate() const {
  if (mu3 < 0.0 || mu4 < 0.0 || std::abs(mu3 + mu4 - 1.0) > 1e-9)
    throw std::invalid_argument("SegConfidenceWeights: mu3 + mu4 must be 1, both >= 0");
}

double informativeness(const VisibilityStats& stats, double depth_to_target,
                       const EmulatorParams& params) {
  const double off = norm(stats.center_offset);
  const double center_term = 1.0 - 2.0 * off / std::sqrt(2.0);
  const double dist_term =
      clamp01(1.0 - std::abs(depth_to_target - params.preferred_distance) / params.distance_band);
  return clamp01(params.w_visible * stats.visible_fraction + params.w_center * center_term +
                 params.w_distance * dist_term);
}

std::optional<int> resolve_prompt(const Scene& scene, const std::string& prompt) {
  std::vector<std::string> tokens = tokenize(prompt);

  // Optional "... next to the <landmark>" suffix.
  std::string landmark;
  if (tokens.size() >= 4) {
    const size_t n = tokens.size();
    if (tokens[n - 4] == "next" && tokens[n - 3] == "to" && tokens[n - 2] == "the") {
      landmark = tokens[n - 1];
      tokens.resize(n - 4);
    }
  }
  if (tokens.empty()) return std::nullopt;

  const std::string cls = tokens.back();
  tokens.pop_back();
  std::vector<std::string> attrs = tokens;
  std::sort(attrs.begin(), attrs.end());

  std::optional<int> found;
  for (const auto& obj : scene.objects) {
    if (obj.class_name != cls) continue;
    std::vector<std::string> oattrs = obj.attributes;
    std::sort(oattrs.begin(), oattrs.end());
    if (oattrs != attrs) continue;
    if (!landmark.empty()) {
      if (!obj.nearest_landmark_id) continue;
      if (scene.object_or_throw(*obj.nearest_landmark_id).class_name != landmark) continue;
    }
    if (found) return std::nullopt;  // ambiguous
    found = obj.id;
  }
  return found;
}

PerceptionOutput ground(const Observation& obs, const std::string& prompt, const Scene& scene,
                        const EmulatorParams& params, uint64_t rng_seed) {
  return ground_internal(obs, prompt, scene, params, rng_seed).out;
}

SegmentResult segment(const Observation& obs, const std::string& prompt, const Scene& scene,
                      const EmulatorParams& params, const SegConfidenceWeights& weights,
                      uint64_t rng_seed) {
  weights.validate();
  SegmentResult res;
  res.output.module = TaskType::segmentation;

  const GroundInternal g = ground_internal(obs, prompt, scene, params, rng_seed);
  res.output.unresolvable_prompt = g.out.unresolvable_prompt;
  if (!g.out.detected()) return res;  // detection miss: empty mask, confidence 0

  res.detector_conf = g.out.confidence;

  Mask mask(obs.width, obs.height);
  const int x0 = std::max(0, static_cast<int>(std::floor(g.out.box.xmin)));
  const int y0 = std::max(0, static_cast<int>(std::floor(g.out.box.ymin)));
  const int x1 = std::min(obs.width, static_cast<int>(std::ceil(g.out.box.xmax)));
  const int y1 = std::min(obs.height, static_cast<int>(std::ceil(g.out.box.ymax)));
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x)
      if (obs.id_at(x, y) == g.target_id) mask.set(x, y, 1);

  Rng rng(mix_seed(rng_seed, stream_tag("segment")));
  const int band = static_cast<int>(
      std::floor((1.0 - g.s) * params.mask_corruption_gain * obs.width / 128.0));
  if (band > 0) {
    // Band = pixels within `band` L1 steps of the mask boundary, inside the box.
    Mask inner = mask, outer = mask;
    for (int i = 0; i < band; ++i) {
      inner = erode4(inner);
      outer = dilate4(outer);
    }
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) {
        const bool in_band = outer.at(x, y) && !inner.at(x, y);
        if (in_band && rng.bernoulli(0.5)) mask.set(x, y, mask.at(x, y) ^ 1);
      }
    }
  }

  res.mask_conf = clamp01(g.s + rng.normal(0.0, params.noise_std));
  res.output.kind = PredictionKind::mask;
  res.output.mask = std::move(mask);
  res.output.confidence = weights.mu3 * res.detector_conf + weights.mu4 * res.mask_conf;
  return res;
}

PerceptionOutput estimate_box3d(const Observation& obs, const Mask& mask, double detector_conf,
                                double mask_conf, const EmulatorParams& params) {
  params.validate();
  PerceptionOutput out;
  out.module = TaskType::box3d;
  if (mask.width != obs.width || mask.height != obs.height)
    throw std::invalid_argument("estimate_box3d: mask/frame dimension mismatch");

  struct Px {
    int x, y;
    double depth;
  };
  std::vector<Px> pixels;
  for (int y = 0; y < obs.height; ++y)
    for (int x = 0; x < obs.width; ++x)
      if (mask.at(x, y) && obs.depth_at(x, y) < static_cast<float>(obs.cam.max_range))
        pixels.push_back({x, y, static_cast<double>(obs.depth_at(x, y))});
  if (pixels.size() < 3) return out;

  std::vector<double> depths;
  depths.reserve(pixels.size());
  for (const auto& p : pixels) depths.push_back(p.depth);
  auto median_of = [](std::vector<double> v) {
    const size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
  };
  const double med = median_of(depths);
  std::vector<double> devs;
  devs.reserve(depths.size());
  for (double d : depths) devs.push_back(std::abs(d - med));
  const double mad = median_of(devs);

  std::vector<Vec3> points;
  for (const auto& p : pixels) {
    if (std::abs(p.depth - med) > 3.0 * mad) continue;
    points.push_back(
        geom::backproject_pixel(obs.cam, obs.pose, {p.x + 0.5, p.y + 0.5}, p.depth));
  }
  if (points.size() < 3) return out;

  const auto fit = geom::fit_min_area_obb(points, geom::kObbDefaultAngleStepDeg);

  const double g_count = std::min(static_cast<double>(points.size()) / kPointTarget, 1.0);
  const double g_retain = static_cast<double>(points.size()) / static_cast<double>(pixels.size());
  const double g_depth = 1.0 - clamp01(mad / kDepthMadScale);

  out.kind = PredictionKind::box3d;
  out.box3 = fit.box;
  out.confidence = (detector_conf + mask_conf + g_count + g_retain + g_depth) / 5.0;
  return out;
}

PerceptionOutput perceive(TaskType module, const Observation& obs, const std::string& prompt,
                          const Scene& scene, const EmulatorParams& params,
                          const SegConfidenceWeights& weights, uint64_t rng_seed) {
  switch (module) {
    case TaskType::grounding:
      return ground(obs, prompt, scene, params, rng_seed);
    case TaskType::segmentation:
      return segment(obs, prompt, scene, params, weights, rng_seed).output;
    case TaskType::box3d: {
      const SegmentResult seg = segment(obs, prompt, scene, params, weights, rng_seed);
      if (!seg.output.detected()) {
        PerceptionOutput out;
        out.module = TaskType::box3d;
        out.unresolvable_prompt = seg.output.unresolvable_prompt;
        return out;
      }
      PerceptionOutput out =
          estimate_box3d(obs, seg.output.mask, seg.detector_conf, seg.mask_conf, params);
      out.unresolvable_prompt = seg.output.unresolvable_prompt;
      return out;
    }
  }
  throw std::invalid_argument("perceive: unknown module tag");
}

std::optional<reward::GeomSnapshot> snapshot_of(const PerceptionOutput& out,
                                                const Observation& obs) {
  reward::GeomSnapshot snap;
  snap.frame_area = static_cast<double>(obs.width) * obs.height;
  snap.frame_center = {obs.width * 0.5, obs.height * 0.5};

  switch (out.kind) {
    case PredictionKind::none:
      return std::nullopt;
    case PredictionKind::box2d: {
      const Box2D b = out.box.clipped(obs.width, obs.height);
      if (b.area() <= 0.0) return std::nullopt;
      snap.predicted_region_area = b.area();
      snap.predicted_center = b.center();
      return snap;
    }
    case PredictionKind::mask: {
      uint64_t count = 0;
      double sx = 0.0, sy = 0.0;
      for (int y = 0; y < out.mask.height; ++y)
        for (int x = 0; x < out.mask.width; ++x)
          if (out.mask.at(x, y)) {
            ++count;
            sx += x + 0.5;
            sy += y + 0.5;
          }
      if (count == 0) return std::nullopt;
      snap.predicted_region_area = static_cast<double>(count);
      snap.predicted_center = {sx / count, sy / count};
      return snap;
    }
    case PredictionKind::box3d: {
      const auto corners = out.box3.corners();
      std::vector<Vec2> projected;
      for (const Vec3& c : corners) {
        // Project without the frustum gate: off-screen corners still shape
        // the hull, which is then clipped to the frame.
        const geom::CameraBasis basis = geom::camera_basis(obs.pose);
        const Vec3 rel = c - obs.pose.position;
        const double cz = dot(rel, basis.fwd);
        if (cz <= 1e-6) return std::nullopt;  // corner behind the camera
        const double t = obs.cam.tan_half_fov();
        const double u = dot(rel, basis.right) / (cz * t);
        const double v = -dot(rel, basis.up) / (cz * t);
        projected.push_back({(u + 1.0) * 0.5 * obs.width, (v + 1.0) * 0.5 * obs.height});
      }
      const geom::Poly2 hull = geom::convex_hull(projected);
      if (hull.size() < 3) return std::nullopt;
      const geom::Poly2 frame{{0.0, 0.0},
                              {static_cast<double>(obs.width), 0.0},
                              {static_cast<double>(obs.width), static_cast<double>(obs.height)},
                              {0.0, static_cast<double>(obs.height)}};
      const geom::Poly2 clipped = geom::clip_convex(hull, frame);
      const double area = std::abs(geom::polygon_area(clipped));
      if (area <= 0.0) return std::nullopt;
      snap.predicted_region_area = area;

      const auto center = geom::project_point(obs.cam, obs.pose, out.box3.center);
      if (center) {
        snap.predicted_center = center->pixel;
      } else {
        // Center off-frame: use the clipped hull centroid instead.
        double cx = 0.0, cy = 0.0;
        for (const Vec2& p : clipped) {
          cx += p.x;
          cy += p.y;
        }
        snap.predicted_center = {cx / clipped.size(), cy / clipped.size()};
      }
      return snap;
    }
  }
  return std::nullopt;
}

}  // namespace vantage::percept
