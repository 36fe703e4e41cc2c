#include "explore/run_config.h"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "explore/io.h"

namespace explore {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("config field '" + field + "' " + why);
}

double positive(const json& j, const std::string& field, double fallback) {
  const double v = j.value(field, fallback);
  if (!(v > 0.0)) bad_field(field, "must be > 0");
  return v;
}

double non_negative(const json& j, const std::string& field, double fallback) {
  const double v = j.value(field, fallback);
  if (!(v >= 0.0)) bad_field(field, "must be >= 0");
  return v;
}

int positive_int(const json& j, const std::string& field, int fallback) {
  const int v = j.value(field, fallback);
  if (v <= 0) bad_field(field, "must be > 0");
  return v;
}

Vec3 vec3_field(const json& j, const std::string& field, const Vec3& fallback) {
  if (!j.contains(field)) return fallback;
  const json& a = j[field];
  if (!a.is_array() || a.size() != 3) bad_field(field, "must be [x, y, z]");
  return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& file) {
  RunConfig config;
  if (file.empty()) {
    return config;
  }
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open config: " + file.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }

  config.scene = j.value("scene", config.scene);
  config.seed = j.value("seed", config.seed);
  config.out_dir = j.value("out", config.out_dir);
  config.trace = j.value("trace", config.trace);
  ExplorationConfig& e = config.exploration;

  if (j.contains("map")) {
    const json& m = j["map"];
    e.map.rho = positive(m, "map.rho", e.map.rho);
    e.map.l_hit = m.value("l_hit", e.map.l_hit);
    e.map.l_miss = m.value("l_miss", e.map.l_miss);
    e.map.l_min = m.value("l_min", e.map.l_min);
    e.map.l_max = m.value("l_max", e.map.l_max);
    if (e.map.l_hit <= 0.0) bad_field("map.l_hit", "must be > 0");
    if (e.map.l_miss >= 0.0) bad_field("map.l_miss", "must be < 0");
    if (e.map.l_min >= e.map.l_max) bad_field("map.l_min", "must be < l_max");
  }
  if (j.contains("sensor")) {
    const json& s = j["sensor"];
    e.camera.r_min = non_negative(s, "sensor.r_min", e.camera.r_min);
    e.camera.r_max = positive(s, "sensor.r_max", e.camera.r_max);
    e.camera.omega_xz = positive(s, "sensor.omega_xz", e.camera.omega_xz);
    e.camera.omega_yz = positive(s, "sensor.omega_yz", e.camera.omega_yz);
    if (e.camera.r_min >= e.camera.r_max) {
      bad_field("sensor.r_min", "must be < r_max");
    }
    if (e.camera.omega_xz >= M_PI || e.camera.omega_yz >= M_PI) {
      bad_field("sensor.omega_xz", "must be < pi");
    }
  }
  if (j.contains("zones")) {
    const json& z = j["zones"];
    e.zones.red_extent = vec3_field(z, "red", e.zones.red_extent);
    e.zones.yellow_extent = vec3_field(z, "yellow", e.zones.yellow_extent);
    e.zones.lambda2 = positive(z, "zones.lambda2", e.zones.lambda2);
    e.zones.lambda3 = positive(z, "zones.lambda3", e.zones.lambda3);
    if (!(e.zones.red_extent.array() > 0.0).all()) {
      bad_field("zones.red", "extents must be > 0");
    }
    if (!(e.zones.red_extent.array() <= e.zones.yellow_extent.array()).all()) {
      bad_field("zones.yellow", "must contain the red zone");
    }
  }
  if (j.contains("sampler")) {
    const json& s = j["sampler"];
    e.sampler.num_samples = positive_int(s, "sampler.num_samples",
                                         e.sampler.num_samples);
    e.sampler.num_headings = positive_int(s, "sampler.num_headings",
                                          e.sampler.num_headings);
  }
  if (j.contains("rrt")) {
    const json& r = j["rrt"];
    e.rrt.step = positive(r, "rrt.step", e.rrt.step);
    e.rrt.goal_bias = non_negative(r, "rrt.goal_bias", e.rrt.goal_bias);
    e.rrt.max_iterations = positive_int(r, "rrt.max_iterations",
                                        e.rrt.max_iterations);
    e.rrt.goal_tolerance = positive(r, "rrt.goal_tolerance",
                                    e.rrt.goal_tolerance);
    e.rrt.edge_check_spacing = positive(r, "rrt.edge_check_spacing",
                                        e.rrt.edge_check_spacing);
    e.rrt.d_max = positive(r, "rrt.d_max", e.rrt.d_max);
    if (e.rrt.goal_bias > 1.0) bad_field("rrt.goal_bias", "must be <= 1");
  }
  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    e.weights.alpha = non_negative(o, "optimizer.alpha", e.weights.alpha);
    e.weights.beta = non_negative(o, "optimizer.beta", e.weights.beta);
    if (o.contains("w")) {
      const json& w = o["w"];
      if (!w.is_array() || w.size() != 4) {
        bad_field("optimizer.w", "must be [wx, wy, wz, wyaw]");
      }
      for (int a = 0; a < 4; ++a) {
        e.weights.w[a] = w[a].get<double>();
        if (!(e.weights.w[a] > 0.0)) {
          bad_field("optimizer.w", "entries must be > 0");
        }
      }
    }
    e.optimizer.max_iterations =
        o.value("max_iterations", e.optimizer.max_iterations);
    if (e.optimizer.max_iterations < 0) {
      bad_field("optimizer.max_iterations", "must be >= 0");
    }
    e.optimizer.step_tolerance = positive(o, "optimizer.step_tolerance",
                                          e.optimizer.step_tolerance);
  }
  if (j.contains("run")) {
    const json& r = j["run"];
    e.ig_epsilon = non_negative(r, "run.epsilon", e.ig_epsilon);
    e.max_outer_iterations = positive_int(r, "run.max_outer_iterations",
                                          e.max_outer_iterations);
    e.rrt_retry_cap = r.value("rrt_retry_cap", e.rrt_retry_cap);
    if (e.rrt_retry_cap < 0) bad_field("run.rrt_retry_cap", "must be >= 0");
    e.scan_angular_resolution = non_negative(r, "run.scan_angular_resolution",
                                             e.scan_angular_resolution);
    if (r.contains("start")) {
      const json& s = r["start"];
      if (!s.is_array() || s.size() != 4) {
        bad_field("run.start", "must be [x, y, z, yaw]");
      }
      e.start = Pose(s[0].get<double>(), s[1].get<double>(),
                     s[2].get<double>(), s[3].get<double>());
    }
  }
  return config;
}

Scene resolve_scene(const std::string& name_or_path) {
  if (const std::optional<Scene> bundled = scenes::by_name(name_or_path)) {
    return *bundled;
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw std::runtime_error("scene not found (no bundled scene or file): " +
                             name_or_path);
  }
  return io::read_scene_json(name_or_path);
}

std::string default_config_json() {
  const RunConfig d;
  json j;
  j["scene"] = d.scene;
  j["seed"] = d.seed;
  j["out"] = d.out_dir;
  j["trace"] = d.trace;
  j["map"] = {{"rho", d.exploration.map.rho},
              {"l_hit", d.exploration.map.l_hit},
              {"l_miss", d.exploration.map.l_miss},
              {"l_min", d.exploration.map.l_min},
              {"l_max", d.exploration.map.l_max}};
  j["sensor"] = {{"r_min", d.exploration.camera.r_min},
                 {"r_max", d.exploration.camera.r_max},
                 {"omega_xz", d.exploration.camera.omega_xz},
                 {"omega_yz", d.exploration.camera.omega_yz}};
  j["zones"] = {{"red",
                 {d.exploration.zones.red_extent.x(),
                  d.exploration.zones.red_extent.y(),
                  d.exploration.zones.red_extent.z()}},
                {"yellow",
                 {d.exploration.zones.yellow_extent.x(),
                  d.exploration.zones.yellow_extent.y(),
                  d.exploration.zones.yellow_extent.z()}},
                {"lambda2", d.exploration.zones.lambda2},
                {"lambda3", d.exploration.zones.lambda3}};
  j["sampler"] = {{"num_samples", d.exploration.sampler.num_samples},
                  {"num_headings", d.exploration.sampler.num_headings}};
  j["rrt"] = {{"step", d.exploration.rrt.step},
              {"goal_bias", d.exploration.rrt.goal_bias},
              {"max_iterations", d.exploration.rrt.max_iterations},
              {"goal_tolerance", d.exploration.rrt.goal_tolerance},
              {"edge_check_spacing", d.exploration.rrt.edge_check_spacing},
              {"d_max", d.exploration.rrt.d_max}};
  j["optimizer"] = {{"alpha", d.exploration.weights.alpha},
                    {"beta", d.exploration.weights.beta},
                    {"w",
                     {d.exploration.weights.w[0], d.exploration.weights.w[1],
                      d.exploration.weights.w[2], d.exploration.weights.w[3]}},
                    {"max_iterations", d.exploration.optimizer.max_iterations},
                    {"step_tolerance", d.exploration.optimizer.step_tolerance}};
  j["run"] = {{"epsilon", d.exploration.ig_epsilon},
              {"max_outer_iterations", d.exploration.max_outer_iterations},
              {"rrt_retry_cap", d.exploration.rrt_retry_cap},
              {"scan_angular_resolution", d.exploration.scan_angular_resolution},
              {"start",
               {d.exploration.start.position.x(),
                d.exploration.start.position.y(),
                d.exploration.start.position.z(), d.exploration.start.yaw}}};
  return j.dump(2) + "\n";
}

}  // namespace explore
