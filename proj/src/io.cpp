#include "explore/io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace explore::io {

namespace {

using nlohmann::json;

void atomic_write(const std::filesystem::path& file, const std::string& body) {
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out << body;
  }
  std::filesystem::rename(tmp, file);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void parse_error(const std::filesystem::path& file, int line,
                              const std::string& what) {
  throw std::runtime_error(file.string() + ":" + std::to_string(line) + ": " +
                           what);
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open: " + file.string());
  }
  return in;
}

}  // namespace

void write_map_snapshot(const std::filesystem::path& file,
                        const VoxelMap& map) {
  std::vector<std::pair<VoxelKey, double>> entries(map.store().begin(),
                                                   map.store().end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string body = "rho " + fmt(map.resolution()) + "\n";
  for (const auto& [key, l] : entries) {
    body += std::to_string(key.i) + " " + std::to_string(key.j) + " " +
            std::to_string(key.k) + " " + fmt(l) + "\n";
  }
  atomic_write(file, body);
}

MapSnapshot read_map_snapshot(const std::filesystem::path& file) {
  std::ifstream in = open_input(file);
  MapSnapshot snapshot;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line_no == 1) {
      std::string tag;
      if (!(fields >> tag >> snapshot.rho) || tag != "rho" ||
          snapshot.rho <= 0.0) {
        parse_error(file, line_no, "expected header 'rho <value>'");
      }
      continue;
    }
    VoxelKey key;
    double l = 0.0;
    if (!(fields >> key.i >> key.j >> key.k >> l)) {
      parse_error(file, line_no, "expected 'i j k l'");
    }
    snapshot.entries.emplace_back(key, l);
  }
  if (snapshot.rho <= 0.0) {
    parse_error(file, 1, "missing 'rho' header");
  }
  return snapshot;
}

VoxelMap map_from_snapshot(const MapSnapshot& snapshot,
                           const VoxelMapConfig& config, const Aabb* bounds) {
  VoxelMapConfig cfg = config;
  cfg.rho = snapshot.rho;
  Aabb box;
  if (bounds != nullptr) {
    box = *bounds;
  } else {
    if (snapshot.entries.empty()) {
      throw std::runtime_error("map_from_snapshot: empty snapshot, no bounds");
    }
    Vec3 lo = voxel_center(snapshot.entries.front().first, cfg.rho);
    Vec3 hi = lo;
    for (const auto& [key, l] : snapshot.entries) {
      const Vec3 c = voxel_center(key, cfg.rho);
      lo = lo.cwiseMin(c);
      hi = hi.cwiseMax(c);
    }
    box = Aabb{lo.array() - cfg.rho, hi.array() + cfg.rho};
  }
  VoxelMap map(cfg, box);
  for (const auto& [key, l] : snapshot.entries) {
    map.set_log_odds(key, l);
  }
  return map;
}

void write_frontier_snapshot(const std::filesystem::path& file,
                             const FrontierSet& frontiers) {
  std::string body;
  for (const VoxelKey& key : frontiers.sorted_keys()) {
    body += std::to_string(key.i) + " " + std::to_string(key.j) + " " +
            std::to_string(key.k) + "\n";
  }
  atomic_write(file, body);
}

void write_path_file(const std::filesystem::path& file, const Path& path) {
  std::string body;
  for (const Pose& q : path) {
    body += fmt(q.position.x()) + " " + fmt(q.position.y()) + " " +
            fmt(q.position.z()) + " " + fmt(q.yaw) + "\n";
  }
  atomic_write(file, body);
}

Path read_path_file(const std::filesystem::path& file) {
  std::ifstream in = open_input(file);
  Path path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    double x, y, z, yaw;
    if (!(fields >> x >> y >> z >> yaw)) {
      parse_error(file, line_no, "expected 'x y z yaw'");
    }
    path.emplace_back(x, y, z, yaw);
  }
  return path;
}

void write_metrics_csv(const std::filesystem::path& file,
                       const RunMetrics& metrics) {
  std::string body = "iter,ig_init,ig_opt,len_init,len_opt,coverage,wall_s\n";
  for (const IterationMetrics& r : metrics.records) {
    body += std::to_string(r.path_index) + "," + fmt(r.ig_initial) + "," +
            fmt(r.ig_optimized) + "," + fmt(r.length_initial) + "," +
            fmt(r.length_optimized) + "," + fmt(r.coverage) + "," +
            fmt(r.wall_seconds) + "\n";
  }
  atomic_write(file, body);
}

void write_trace_csv(const std::filesystem::path& file,
                     const std::vector<IterationRecord>& trace) {
  std::string body = "iter,objective,ig,g_l,step\n";
  for (const IterationRecord& r : trace) {
    body += std::to_string(r.iteration) + "," + fmt(r.objective) + "," +
            fmt(r.ig) + "," + fmt(r.length_cost) + "," + fmt(r.step) + "\n";
  }
  atomic_write(file, body);
}

namespace {

Vec3 vec3_from_json(const json& j, const std::filesystem::path& file) {
  if (!j.is_array() || j.size() != 3) {
    throw std::runtime_error(file.string() + ": expected a [x, y, z] triple");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Aabb box_from_json(const json& j, const std::filesystem::path& file) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error(file.string() +
                             ": expected a [min, max] pair of triples");
  }
  const Aabb box{vec3_from_json(j[0], file), vec3_from_json(j[1], file)};
  if (!(box.min.array() <= box.max.array()).all()) {
    throw std::runtime_error(file.string() + ": box min exceeds max");
  }
  return box;
}

json box_to_json(const Aabb& box) {
  return json::array({{box.min.x(), box.min.y(), box.min.z()},
                      {box.max.x(), box.max.y(), box.max.z()}});
}

}  // namespace

Scene read_scene_json(const std::filesystem::path& file) {
  std::ifstream in = open_input(file);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  Scene scene;
  scene.name = j.value("name", std::string("unnamed"));
  if (!j.contains("bounds")) {
    throw std::runtime_error(file.string() + ": missing 'bounds'");
  }
  scene.bounds = box_from_json(j["bounds"], file);
  for (const json& obstacle : j.value("obstacles", json::array())) {
    scene.obstacles.push_back(box_from_json(obstacle, file));
  }
  return scene;
}

void write_scene_json(const std::filesystem::path& file, const Scene& scene) {
  json j;
  j["name"] = scene.name;
  j["bounds"] = box_to_json(scene.bounds);
  json obstacles = json::array();
  for (const Aabb& box : scene.obstacles) {
    obstacles.push_back(box_to_json(box));
  }
  j["obstacles"] = obstacles;
  atomic_write(file, j.dump(2) + "\n");
}

}  // namespace explore::io
