#pragma once

#include <optional>
#include <random>

#include "explore/camera_visibility.h"

namespace explore {

// Inaccessible (red) and hazardous (yellow) boxes centred on the robot,
// given as full extents, plus the penalty weights for the yellow-zone count
// and the distance-to-current-pose factor.
struct SafetyZones {
  Vec3 red_extent{0.6, 0.6, 0.35};
  Vec3 yellow_extent{1.2, 1.2, 0.7};
  double lambda2 = 0.5;
  double lambda3 = 0.1;
};

/// Keys of all voxels overlapping the box of `extent` centred at `center`.
std::vector<VoxelKey> zone_voxels(const Vec3& center, const Vec3& extent,
                                  double rho);

// Hard collision gate: 0 when any red-zone voxel is unknown or occupied
// (log-odds >= 0, with absent voxels counting as 0), else 1.
double alpha1(const VoxelMap& map, const Pose& q, const SafetyZones& zones);

/// exp(-lambda2 * k) with k the yellow-zone voxels of occupancy >= 0.5.
double alpha2(const VoxelMap& map, const Pose& q, const SafetyZones& zones);

/// exp(-lambda3 * ||q - q0||) over the 4-DOF pose distance.
double alpha3(const Pose& q, const Pose& q0, double lambda3);

/// ViewQuality: f(q) * alpha1 * alpha2 * alpha3.
double view_quality(const VoxelMap& map, const FrontierSet& frontiers,
                    const CameraModel& cam, const Pose& q, const Pose& q0,
                    const SafetyZones& zones);

struct SamplerConfig {
  int num_samples = 200;
  int num_headings = 8;
};

// Next-best-view by sampling: positions drawn uniformly from the free
// voxels, yaw uniformly from the discrete headings. Returns the
// first-sampled argmax of view_quality, or nullopt when every sample scores
// zero (no informative view).
std::optional<Pose> next_best_view(const VoxelMap& map,
                                   const FrontierSet& frontiers,
                                   const CameraModel& cam, const Pose& q0,
                                   const SafetyZones& zones,
                                   const SamplerConfig& sampler,
                                   std::mt19937_64& rng);

}  // namespace explore
