#include "vantage/render/renderer.hpp"

#include "vantage/kernels/kernels.hpp"

namespace vantage::render {

namespace {

kernels::RaycastFrame make_frame(const Pose& pose, const CameraConfig& cam) {
  const geom::CameraBasis basis = geom::camera_basis(pose);
  kernels::RaycastFrame f{};
  f.width = cam.width;
  f.height = cam.height;
  f.tan_half_fov = static_cast<float>(cam.tan_half_fov());
  f.max_range = static_cast<float>(cam.max_range);
  f.eye[0] = static_cast<float>(pose.position.x);
  f.eye[1] = static_cast<float>(pose.position.y);
  f.eye[2] = static_cast<float>(pose.position.z);
  for (int k = 0; k < 3; ++k) {
    const double* r = &basis.right.x;
    const double* u = &basis.up.x;
    const double* w = &basis.fwd.x;
    f.right[k] = static_cast<float>(r[k]);
    f.up[k] = static_cast<float>(u[k]);
    f.fwd[k] = static_cast<float>(w[k]);
  }
  return f;
}

Observation render_boxes(const std::vector<kernels::RayBox>& boxes, const Pose& pose,
                         const CameraConfig& cam) {
  cam.validate();
  Observation obs;
  obs.width = cam.width;
  obs.height = cam.height;
  obs.depth.resize(static_cast<size_t>(cam.width) * cam.height);
  obs.instance.resize(obs.depth.size());
  obs.pose = pose;
  obs.cam = cam;

  const kernels::RaycastFrame frame = make_frame(pose, cam);
  const auto& k = kernels::active_kernels();
  for (int row = 0; row < cam.height; ++row) {
    k.raycast_row(frame, boxes.data(), static_cast<int>(boxes.size()), row,
                  obs.depth.data() + static_cast<size_t>(row) * cam.width,
                  obs.instance.data() + static_cast<size_t>(row) * cam.width);
  }
  return obs;
}

}  // namespace

Observation render(const scene::Scene& scene, const Pose& pose, const CameraConfig& cam) {
  return render_boxes(scene.ray_boxes(), pose, cam);
}

IdStats id_stats(const Observation& obs, int32_t id) {
  const auto& k = kernels::active_kernels();
  uint64_t total = 0;
  uint64_t sum_x = 0;
  double sum_y = 0.0;
  for (int row = 0; row < obs.height; ++row) {
    uint64_t count = 0, col_sum = 0;
    k.id_row_stats(obs.instance.data() + static_cast<size_t>(row) * obs.width, obs.width, id,
                   &count, &col_sum);
    total += count;
    sum_x += col_sum;
    sum_y += static_cast<double>(count) * (row + 0.5);
  }
  IdStats s;
  s.count = total;
  if (total > 0) {
    s.centroid = {static_cast<double>(sum_x) / total + 0.5, sum_y / static_cast<double>(total)};
  }
  return s;
}

VisibilityStats visibility_in(const Observation& full, const scene::Scene& scene, int object_id) {
  const Observation alone = render_boxes(scene.ray_boxes_for(object_id), full.pose, full.cam);

  const IdStats vis = id_stats(full, object_id);
  const IdStats sil = id_stats(alone, object_id);

  VisibilityStats out;
  out.visible_pixels = vis.count;
  out.silhouette_pixels = sil.count;
  out.visible_fraction =
      sil.count == 0 ? 0.0 : static_cast<double>(vis.count) / static_cast<double>(sil.count);
  if (vis.count > 0) {
    out.center_offset = {(vis.centroid.x - full.cam.width * 0.5) / full.cam.width,
                         (vis.centroid.y - full.cam.height * 0.5) / full.cam.height};
  }
  return out;
}

VisibilityStats visibility(const scene::Scene& scene, const Pose& pose, const CameraConfig& cam,
                           int object_id) {
  return visibility_in(render(scene, pose, cam), scene, object_id);
}

}  // namespace vantage::render
