#pragma once

#include <optional>
#include <random>
#include <vector>

#include "explore/view_quality.h"

namespace explore {

// Ordered viewpoint sequence; the first and last poses are the fixed start
// and goal.
using Path = std::vector<Pose>;

/// Euclidean length of the position polyline.
double path_position_length(const Path& path);

struct RrtConfig {
  double step = 1.0;
  double goal_bias = 0.1;
  int max_iterations = 5000;
  double goal_tolerance = 0.3;    // one voxel by default
  double edge_check_spacing = 0.15;  // rho / 2 by default
  double d_max = 2.0;
};

// True when no occupied voxel overlaps the red zone at `position` and the
// position lies inside the map bounds. Unknown voxels are permitted here:
// global planning collision-checks against occupied space only.
bool position_occupied_free(const VoxelMap& map, const Vec3& position,
                            const SafetyZones& zones);

// RRT through known-free space from start to goal. Positions are sampled
// from the free voxels; straight-line edges are checked at
// edge_check_spacing. Intermediate waypoint yaws face the direction of
// travel; the start and goal poses are returned exactly. Returns nullopt on
// planning failure.
std::optional<Path> plan_rrt(const VoxelMap& map, const Pose& start,
                             const Pose& goal, const SafetyZones& zones,
                             const RrtConfig& config, std::mt19937_64& rng);

// Inserts interpolated poses so consecutive positions are at most d_max
// apart. Yaw interpolates along the shortest arc; the original poses
// (endpoints in particular) are preserved exactly.
Path densify(const Path& path, double d_max);

}  // namespace explore
