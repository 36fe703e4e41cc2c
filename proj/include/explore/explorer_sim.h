#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "explore/path_optimizer.h"
#include "explore/scene.h"

namespace explore {

struct ScanRay {
  Vec3 endpoint;
  bool hit;
};

struct ScanBatch {
  Vec3 origin;
  std::vector<ScanRay> rays;
};

// Casts a grid of rays over the camera frustum against the ground-truth
// scene. Each ray reports the first obstacle intersection within
// [r_min, r_max] as a hit, or the r_max endpoint (clipped to the scene
// bounds) as a miss; rays blocked closer than r_min are dropped. Throws when
// the pose is outside the bounds or inside an obstacle.
ScanBatch simulate_scan(const Scene& scene, const CameraModel& cam,
                        const Pose& q, double angular_resolution);

/// Integrates a scan into the map; returns the union of touched voxels.
std::vector<VoxelKey> apply_scan(VoxelMap& map, const ScanBatch& scan);

struct IterationMetrics {
  int path_index = 0;
  double ig_initial = 0.0;
  double ig_optimized = 0.0;
  double length_initial = 0.0;
  double length_optimized = 0.0;
  double objective_initial = 0.0;
  double objective_final = 0.0;
  double coverage = 0.0;
  double wall_seconds = 0.0;
};

struct RunMetrics {
  std::vector<IterationMetrics> records;
  bool partial = false;
  std::string termination;  // ig_below_epsilon | no_informative_view |
                            // rrt_failed | max_iterations
};

struct ExplorationConfig {
  VoxelMapConfig map;
  CameraModel camera;
  SafetyZones zones;
  SamplerConfig sampler;
  RrtConfig rrt;
  ObjectiveWeights weights;
  OptimizeOptions optimizer;
  Pose start{2.55, 2.55, 1.35, 0.0};
  double ig_epsilon = 2.0;
  int max_outer_iterations = 100;
  int rrt_retry_cap = 5;
  double scan_angular_resolution = 0.0;  // 0: one ray per rho / r_max radians
};

struct PathRecordPair {
  Path initial;
  Path optimized;
};

struct ExplorationResult {
  RunMetrics metrics;
  VoxelMap map;
  FrontierSet frontiers;
  std::vector<PathRecordPair> paths;
};

// Full exploration loop: next-best-view, RRT, gradient path optimisation,
// then teleport-and-scan along the optimised path, until the path
// information gain drops below epsilon or no informative view remains.
// Executed poses whose red zone holds a ground-truth occupied voxel truncate
// execution of the remaining path. Deterministic for a fixed seed.
ExplorationResult run_exploration(const Scene& scene,
                                  const ExplorationConfig& config,
                                  uint64_t seed);

// Fraction of the coverage denominator that the map has classified (free or
// occupied). The denominator is every ground-truth free voxel flood-fill
// reachable (6-connectivity) from the start position, plus the occupied
// voxels face-adjacent to those (the observable surfaces).
double coverage_ratio(const VoxelMap& map, const Scene& scene,
                      const Vec3& start_position);

/// The coverage denominator itself, for tests and termination reporting.
std::vector<VoxelKey> coverage_targets(const Scene& scene, double rho,
                                       const Vec3& start_position);

}  // namespace explore
