#pragma once

// Shared fixture helpers for the test suites: synthetic maps built directly
// from log-odds writes, and partially-explored maps built by running the
// real scan pipeline over a bundled scene.

#include <random>

#include "explore/explorer_sim.h"

namespace explore::testing {

/// Sets every voxel whose centre lies inside `box` to the given log-odds.
inline void fill_box(VoxelMap& map, const Aabb& box, double log_odds) {
  const double rho = map.resolution();
  const VoxelKey lo = key_of(box.min, rho);
  const VoxelKey hi = key_of(box.max, rho);
  for (int32_t i = lo.i; i <= hi.i; ++i) {
    for (int32_t j = lo.j; j <= hi.j; ++j) {
      for (int32_t k = lo.k; k <= hi.k; ++k) {
        const VoxelKey key{i, j, k};
        if (box.contains(voxel_center(key, rho))) {
          map.set_log_odds(key, log_odds);
        }
      }
    }
  }
}

struct MapFixture {
  VoxelMap map;
  FrontierSet frontiers;
};

/// Map + frontiers after scanning `scene` from each pose in turn.
inline MapFixture scanned_fixture(const Scene& scene, const CameraModel& cam,
                                  const std::vector<Pose>& poses,
                                  const VoxelMapConfig& config = {},
                                  double angular_resolution = 0.0) {
  MapFixture fixture{VoxelMap(config, scene.bounds),
                     FrontierSet(config.rho)};
  const double res = angular_resolution > 0.0 ? angular_resolution
                                              : config.rho / cam.r_max;
  for (const Pose& q : poses) {
    const ScanBatch scan = simulate_scan(scene, cam, q, res);
    update_after_scan(fixture.frontiers, fixture.map,
                      apply_scan(fixture.map, scan));
  }
  return fixture;
}

/// Uniform point inside a box (for random test geometry).
inline Vec3 random_point(const Aabb& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(box.min.x(), box.max.x());
  std::uniform_real_distribution<double> uy(box.min.y(), box.max.y());
  std::uniform_real_distribution<double> uz(box.min.z(), box.max.z());
  return Vec3(ux(rng), uy(rng), uz(rng));
}

/// Random pose with position in a box and uniform yaw.
inline Pose random_pose(const Aabb& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uyaw(-M_PI, M_PI);
  return Pose(random_point(box, rng), uyaw(rng));
}

}  // namespace explore::testing
