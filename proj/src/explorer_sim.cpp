#include "explore/explorer_sim.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace explore {

namespace {

// Slab test: first entry parameter of the ray into the box, or infinity.
// Rays starting inside a box report t = 0.
double ray_box_entry(const Vec3& origin, const Vec3& dir, const Aabb& box) {
  double t_enter = 0.0;
  double t_exit = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (dir[a] == 0.0) {
      if (origin[a] < box.min[a] || origin[a] > box.max[a]) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    double t0 = (box.min[a] - origin[a]) / dir[a];
    double t1 = (box.max[a] - origin[a]) / dir[a];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
  }
  return t_enter <= t_exit ? t_enter : std::numeric_limits<double>::infinity();
}

// Exit parameter of a ray from inside the box.
double ray_box_exit(const Vec3& origin, const Vec3& dir, const Aabb& box) {
  double t_exit = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (dir[a] > 0.0) {
      t_exit = std::min(t_exit, (box.max[a] - origin[a]) / dir[a]);
    } else if (dir[a] < 0.0) {
      t_exit = std::min(t_exit, (box.min[a] - origin[a]) / dir[a]);
    }
  }
  return t_exit;
}

}  // namespace

ScanBatch simulate_scan(const Scene& scene, const CameraModel& cam,
                        const Pose& q, double angular_resolution) {
  if (!scene.bounds.contains(q.position)) {
    throw std::invalid_argument("simulate_scan: pose outside scene bounds");
  }
  if (scene_occupied_point(scene, q.position)) {
    throw std::invalid_argument("simulate_scan: pose inside an obstacle");
  }
  if (angular_resolution <= 0.0) {
    throw std::invalid_argument("simulate_scan: angular resolution must be > 0");
  }

  const int na = std::max(1, static_cast<int>(
                                 std::ceil(cam.omega_xz / angular_resolution)));
  const int nb = std::max(1, static_cast<int>(
                                 std::ceil(cam.omega_yz / angular_resolution)));

  ScanBatch batch;
  batch.origin = q.position;
  batch.rays.reserve(static_cast<std::size_t>(na) * nb);

  for (int ia = 0; ia < na; ++ia) {
    // Cell-centred angles keep rays off the exact frustum planes.
    const double a = -0.5 * cam.omega_xz + cam.omega_xz * (ia + 0.5) / na;
    for (int ib = 0; ib < nb; ++ib) {
      const double b = -0.5 * cam.omega_yz + cam.omega_yz * (ib + 0.5) / nb;
      const Vec3 dir_cam =
          Vec3(std::tan(a), std::tan(b), 1.0).normalized();
      const Vec3 dir = from_camera_frame(q, dir_cam) - q.position;

      // Endpoints must stay strictly inside the bounds for map integration.
      const double t_bounds =
          ray_box_exit(batch.origin, dir, scene.bounds) - 1e-6;
      const double t_limit = std::min(cam.r_max, t_bounds);

      double t_hit = std::numeric_limits<double>::infinity();
      for (const Aabb& obstacle : scene.obstacles) {
        t_hit = std::min(t_hit, ray_box_entry(batch.origin, dir, obstacle));
      }

      if (t_hit <= t_limit) {
        if (t_hit < cam.r_min) {
          continue;  // blocked inside the blind range: no measurement
        }
        batch.rays.push_back({batch.origin + t_hit * dir, true});
      } else {
        batch.rays.push_back({batch.origin + t_limit * dir, false});
      }
    }
  }
  return batch;
}

std::vector<VoxelKey> apply_scan(VoxelMap& map, const ScanBatch& scan) {
  std::unordered_set<VoxelKey, VoxelKeyHash> touched;
  for (const ScanRay& ray : scan.rays) {
    for (const VoxelKey& key :
         map.integrate_ray(scan.origin, ray.endpoint, ray.hit)) {
      touched.insert(key);
    }
  }
  return std::vector<VoxelKey>(touched.begin(), touched.end());
}

std::vector<VoxelKey> coverage_targets(const Scene& scene, double rho,
                                       const Vec3& start_position) {
  const VoxelKey start = key_of(start_position, rho);
  if (!scene_free_voxel(scene, start, rho)) {
    throw std::invalid_argument("coverage_targets: start voxel not free");
  }

  std::unordered_set<VoxelKey, VoxelKeyHash> reachable;
  std::deque<VoxelKey> queue{start};
  reachable.insert(start);
  const int face[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                          {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  while (!queue.empty()) {
    const VoxelKey cur = queue.front();
    queue.pop_front();
    for (const auto& f : face) {
      const VoxelKey next{cur.i + f[0], cur.j + f[1], cur.k + f[2]};
      if (reachable.count(next) || !scene_free_voxel(scene, next, rho)) {
        continue;
      }
      reachable.insert(next);
      queue.push_back(next);
    }
  }

  std::unordered_set<VoxelKey, VoxelKeyHash> targets = reachable;
  for (const VoxelKey& cur : reachable) {
    for (const auto& f : face) {
      const VoxelKey next{cur.i + f[0], cur.j + f[1], cur.k + f[2]};
      if (scene_occupied_voxel(scene, next, rho)) {
        targets.insert(next);  // observable surface voxel
      }
    }
  }
  return std::vector<VoxelKey>(targets.begin(), targets.end());
}

namespace {

double classified_fraction(const VoxelMap& map,
                           const std::vector<VoxelKey>& targets) {
  if (targets.empty()) {
    return 1.0;
  }
  std::size_t classified = 0;
  for (const VoxelKey& key : targets) {
    if (!map.is_unknown(key)) {
      ++classified;
    }
  }
  return static_cast<double>(classified) / static_cast<double>(targets.size());
}

bool red_zone_hits_ground_truth(const Scene& scene, const Vec3& position,
                                const Vec3& red_extent, double rho) {
  for (const VoxelKey& v : zone_voxels(position, red_extent, rho)) {
    if (scene_occupied_voxel(scene, v, rho)) {
      return true;
    }
  }
  return false;
}

}  // namespace

double coverage_ratio(const VoxelMap& map, const Scene& scene,
                      const Vec3& start_position) {
  return classified_fraction(
      map, coverage_targets(scene, map.resolution(), start_position));
}

ExplorationResult run_exploration(const Scene& scene,
                                  const ExplorationConfig& config,
                                  uint64_t seed) {
  const double rho = config.map.rho;
  const double angular_resolution = config.scan_angular_resolution > 0.0
                                        ? config.scan_angular_resolution
                                        : rho / config.camera.r_max;
  const FuzzyConfig fuzzy = FuzzyConfig::from_camera(config.camera);

  ExplorationResult result{
      RunMetrics{}, VoxelMap(config.map, scene.bounds), FrontierSet(rho), {}};
  VoxelMap& map = result.map;
  FrontierSet& frontiers = result.frontiers;
  std::mt19937_64 rng(seed);

  const std::vector<VoxelKey> targets =
      coverage_targets(scene, rho, config.start.position);

  const auto update_map_at = [&](const Pose& q) {
    const ScanBatch scan = simulate_scan(scene, config.camera, q,
                                         angular_resolution);
    update_after_scan(frontiers, map, apply_scan(map, scan));
  };

  Pose current = config.start.normalized();
  update_map_at(current);

  for (int iteration = 0; iteration < config.max_outer_iterations;
       ++iteration) {
    const auto t0 = std::chrono::steady_clock::now();

    // Goal selection with RRT retries: a failed plan resamples the goal.
    std::optional<Pose> goal;
    std::optional<Path> planned;
    for (int attempt = 0; attempt <= config.rrt_retry_cap; ++attempt) {
      goal = next_best_view(map, frontiers, config.camera, current,
                            config.zones, config.sampler, rng);
      if (!goal) {
        result.metrics.termination = "no_informative_view";
        return result;
      }
      planned = plan_rrt(map, current, *goal, config.zones, config.rrt, rng);
      if (planned) {
        break;
      }
    }
    if (!planned) {
      result.metrics.partial = true;
      result.metrics.termination = "rrt_failed";
      return result;
    }

    const Path initial = densify(*planned, config.rrt.d_max);
    const OptimizeResult optimized =
        optimize_path(map, frontiers, config.camera, initial, config.weights,
                      fuzzy, config.optimizer);

    IterationMetrics record;
    record.path_index = iteration;
    record.ig_initial = ig_path_value(map, frontiers, config.camera, initial, fuzzy);
    record.ig_optimized = optimized.ig;
    record.length_initial = path_position_length(initial);
    record.length_optimized = path_position_length(optimized.path);
    record.objective_initial = -config.weights.alpha * record.ig_initial +
                               config.weights.beta *
                                   path_length_cost(initial, config.weights.w).value();
    record.objective_final = optimized.objective;
    result.paths.push_back({initial, optimized.path});

    // Execute: teleport-and-scan each viewpoint; a ground-truth collision of
    // the red zone truncates the remaining path.
    for (const Pose& q : optimized.path) {
      if (!scene.bounds.contains(q.position) ||
          scene_occupied_point(scene, q.position) ||
          red_zone_hits_ground_truth(scene, q.position,
                                     config.zones.red_extent, rho)) {
        break;
      }
      update_map_at(q);
      current = q.normalized();
    }

    record.coverage = classified_fraction(map, targets);
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    result.metrics.records.push_back(record);

    if (optimized.ig < config.ig_epsilon) {
      result.metrics.termination = "ig_below_epsilon";
      return result;
    }
  }

  result.metrics.partial = true;
  result.metrics.termination = "max_iterations";
  return result;
}

}  // namespace explore
