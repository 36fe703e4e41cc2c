#include "explore/view_quality.h"

#include <cmath>

namespace explore {

std::vector<VoxelKey> zone_voxels(const Vec3& center, const Vec3& extent,
                                  double rho) {
  const VoxelKey lo = key_of(center - 0.5 * extent, rho);
  const VoxelKey hi = key_of(center + 0.5 * extent, rho);
  std::vector<VoxelKey> keys;
  keys.reserve(static_cast<std::size_t>(hi.i - lo.i + 1) *
               (hi.j - lo.j + 1) * (hi.k - lo.k + 1));
  for (int32_t i = lo.i; i <= hi.i; ++i) {
    for (int32_t j = lo.j; j <= hi.j; ++j) {
      for (int32_t k = lo.k; k <= hi.k; ++k) {
        keys.push_back(VoxelKey{i, j, k});
      }
    }
  }
  return keys;
}

double alpha1(const VoxelMap& map, const Pose& q, const SafetyZones& zones) {
  for (const VoxelKey& v :
       zone_voxels(q.position, zones.red_extent, map.resolution())) {
    if (map.log_odds(v) >= 0.0) {
      return 0.0;
    }
  }
  return 1.0;
}

double alpha2(const VoxelMap& map, const Pose& q, const SafetyZones& zones) {
  int count = 0;
  for (const VoxelKey& v :
       zone_voxels(q.position, zones.yellow_extent, map.resolution())) {
    if (map.occupancy(v) >= 0.5) {
      ++count;
    }
  }
  return std::exp(-zones.lambda2 * count);
}

double alpha3(const Pose& q, const Pose& q0, double lambda3) {
  return std::exp(-lambda3 * pose_distance(q, q0));
}

double view_quality(const VoxelMap& map, const FrontierSet& frontiers,
                    const CameraModel& cam, const Pose& q, const Pose& q0,
                    const SafetyZones& zones) {
  if (alpha1(map, q, zones) == 0.0) {
    return 0.0;  // f(q) is the expensive factor; the gate already zeros it
  }
  const int f = visible_frontier_count(map, frontiers, cam, q);
  if (f == 0) {
    return 0.0;
  }
  return f * alpha2(map, q, zones) * alpha3(q, q0, zones.lambda3);
}

std::optional<Pose> next_best_view(const VoxelMap& map,
                                   const FrontierSet& frontiers,
                                   const CameraModel& cam, const Pose& q0,
                                   const SafetyZones& zones,
                                   const SamplerConfig& sampler,
                                   std::mt19937_64& rng) {
  const std::vector<VoxelKey> free = map.free_keys_sorted();
  if (free.empty()) {
    return std::nullopt;
  }
  std::uniform_int_distribution<std::size_t> pick_voxel(0, free.size() - 1);
  std::uniform_int_distribution<int> pick_heading(0,
                                                  sampler.num_headings - 1);

  std::optional<Pose> best;
  double best_quality = 0.0;
  for (int s = 0; s < sampler.num_samples; ++s) {
    const VoxelKey key = free[pick_voxel(rng)];
    const double heading =
        2.0 * M_PI * pick_heading(rng) / sampler.num_headings;
    const Pose q(voxel_center(key, map.resolution()), wrap_angle(heading));
    const double quality = view_quality(map, frontiers, cam, q, q0, zones);
    if (quality > best_quality) {
      best_quality = quality;
      best = q;
    }
  }
  return best;
}

}  // namespace explore
