#include "vantage/scene/scene_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vantage::scene {

using ordered_json = nlohmann::ordered_json;

std::string scene_to_json(const Scene& scene) {
  ordered_json j;
  j["format_version"] = Scene::kFormatVersion;
  j["seed"] = scene.seed;
  j["bounds"] = {{"min_x", scene.bounds.min_x},
                 {"min_z", scene.bounds.min_z},
                 {"max_x", scene.bounds.max_x},
                 {"max_z", scene.bounds.max_z}};
  j["agent_radius"] = scene.agent_radius;
  j["wall_height"] = scene.wall_height;
  j["placement_reduced"] = scene.placement_reduced;

  ordered_json objs = ordered_json::array();
  for (const auto& o : scene.objects) {
    ordered_json jo;
    jo["id"] = o.id;
    jo["class"] = o.class_name;
    jo["attributes"] = o.attributes;
    jo["center"] = {o.box.center.x, o.box.center.y, o.box.center.z};
    jo["half_extents"] = {o.box.half_extents.x, o.box.half_extents.y, o.box.half_extents.z};
    jo["yaw_deg"] = o.box.yaw_deg;
    if (o.nearest_landmark_id) jo["nearest_landmark_id"] = *o.nearest_landmark_id;
    objs.push_back(jo);
  }
  j["objects"] = objs;

  ordered_json grid;
  grid["cell_size"] = scene.grid.cell_size;
  grid["nx"] = scene.grid.nx;
  grid["nz"] = scene.grid.nz;
  std::vector<std::string> rows;
  for (int z = 0; z < scene.grid.nz; ++z) {
    std::string row(scene.grid.nx, '#');
    for (int x = 0; x < scene.grid.nx; ++x)
      if (scene.grid.navigable(x, z)) row[x] = '.';
    rows.push_back(row);
  }
  grid["rows"] = rows;
  j["nav_grid"] = grid;
  return j.dump(2) + "\n";
}

Scene scene_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("scene file: parse error: ") + e.what());
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != Scene::kFormatVersion)
      throw std::runtime_error("scene file: unsupported format_version " +
                               std::to_string(version));
    Scene sc;
    sc.seed = j.at("seed").get<uint64_t>();
    const auto& b = j.at("bounds");
    sc.bounds = {b.at("min_x").get<double>(), b.at("min_z").get<double>(),
                 b.at("max_x").get<double>(), b.at("max_z").get<double>()};
    sc.agent_radius = j.at("agent_radius").get<double>();
    sc.wall_height = j.at("wall_height").get<double>();
    sc.placement_reduced = j.value("placement_reduced", false);

    for (const auto& jo : j.at("objects")) {
      SceneObject o;
      o.id = jo.at("id").get<int>();
      o.class_name = jo.at("class").get<std::string>();
      o.attributes = jo.at("attributes").get<std::vector<std::string>>();
      const auto& c = jo.at("center");
      const auto& h = jo.at("half_extents");
      o.box.center = {c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()};
      o.box.half_extents = {h.at(0).get<double>(), h.at(1).get<double>(), h.at(2).get<double>()};
      o.box.yaw_deg = jo.at("yaw_deg").get<double>();
      if (jo.contains("nearest_landmark_id"))
        o.nearest_landmark_id = jo.at("nearest_landmark_id").get<int>();
      sc.objects.push_back(o);
    }

    const auto& g = j.at("nav_grid");
    sc.grid.cell_size = g.at("cell_size").get<double>();
    sc.validate();
    sc.grid = sc.derive_grid();
    if (sc.grid.nx != g.at("nx").get<int>() || sc.grid.nz != g.at("nz").get<int>())
      throw std::runtime_error("scene file: nav grid dimensions disagree with bounds");
    const auto rows = g.at("rows").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != sc.grid.nz)
      throw std::runtime_error("scene file: nav grid row count mismatch");
    for (int z = 0; z < sc.grid.nz; ++z) {
      if (static_cast<int>(rows[z].size()) != sc.grid.nx)
        throw std::runtime_error("scene file: nav grid row length mismatch");
      for (int x = 0; x < sc.grid.nx; ++x) {
        const bool stored = rows[z][x] == '.';
        if (stored != (sc.grid.navigable(x, z) != 0))
          throw std::runtime_error("scene file: stored nav grid disagrees with derivation at (" +
                                   std::to_string(x) + "," + std::to_string(z) + ")");
      }
    }
    sc.rebuild_caches();
    return sc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("scene file: invalid structure: ") + e.what());
  }
}

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_scene: cannot open " + path);
  out << scene_to_json(scene);
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_scene: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scene_from_json(ss.str());
}

}  // namespace vantage::scene
