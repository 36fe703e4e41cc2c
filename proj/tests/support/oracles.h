#pragma once

// Brute-force reference implementations, independent of the library's
// incremental/grid-stepping code paths. Everything here favours obviousness
// over speed; these are the oracles the fast implementations are tested
// against.

#include <Eigen/Core>

#include <vector>

#include "explore/diff_ig.h"
#include "explore/explorer_sim.h"

namespace explore::oracle {

// Voxels whose intersection with the segment has positive length, computed
// by slab tests over candidate cells, ordered by entry parameter. Includes
// both end voxels.
std::vector<VoxelKey> exact_pierced_voxels(const Vec3& origin,
                                           const Vec3& endpoint, double rho);

// Voxels visited by dense point sampling along the segment at the given
// step, in first-appearance order.
std::vector<VoxelKey> sampled_voxels(const Vec3& origin, const Vec3& endpoint,
                                     double rho, double step);

/// Shortest chord among the voxels pierced by the segment.
double min_pierced_chord(const Vec3& origin, const Vec3& endpoint, double rho);

/// Line-of-sight via exact piercing; skips the camera and target voxels.
bool unobstructed_ref(const VoxelMap& map, const Vec3& camera_pos,
                      const VoxelKey& v, double rho);

/// Frustum membership via range and atan2 angle gates (no plane normals).
bool in_frustum_ref(const CameraModel& cam, const Pose& q, const Vec3& point);

/// f(q) recomputed with the reference gates.
int visible_frontier_count_ref(const VoxelMap& map,
                               const FrontierSet& frontiers,
                               const CameraModel& cam, const Pose& q);

/// Frontier set by scanning every voxel in the bounds box.
std::vector<VoxelKey> rebuild_frontiers_ref(const VoxelMap& map);

struct PhiRefOptions {
  // Deliberate defect for harness-sensitivity checks: reverses the slope of
  // the translational filter's linear piece.
  bool flip_phi_d_slope = false;
};

/// Camera-frame coordinates via an explicit Eigen rotation matrix.
Vec3 camera_coords_ref(const Pose& q, const Vec3& point);

/// The fuzzy filter transcribed directly from its definition.
double phi_ref(const Pose& q, const Vec3& point, const FuzzyConfig& cfg,
               const PhiRefOptions& opts = {});

/// True when the point lies in the camera-frame cube of edge 4 r_max.
bool in_cube_ref(const Pose& q, const Vec3& point, const FuzzyConfig& cfg);

// The per-viewpoint contribution pattern of the path information gain:
// centres of the voxels that pass the cube and occlusion gates at each
// interior viewpoint, with erasure applied between viewpoints. This freezes
// every discrete decision of the primal evaluation.
struct PathPattern {
  std::vector<std::vector<Vec3>> centers;  // one list per interior viewpoint
};

PathPattern record_path_pattern(const VoxelMap& map,
                                const FrontierSet& frontiers,
                                const CameraModel& cam, const Path& path,
                                const FuzzyConfig& cfg);

/// Sum of phi_ref over a frozen pattern evaluated at `path`'s poses.
double path_pattern_sum(const PathPattern& pattern, const Path& path,
                        const FuzzyConfig& cfg, const PhiRefOptions& opts = {});

/// Independent end-to-end path information gain (pattern + sum at primal).
double ig_path_ref(const VoxelMap& map, const FrontierSet& frontiers,
                   const CameraModel& cam, const Path& path,
                   const FuzzyConfig& cfg);

// Central finite differences of the frozen-pattern sum with respect to the
// interior pose coordinates.
Eigen::VectorXd fd_grad_path(const PathPattern& pattern, const Path& path,
                             const FuzzyConfig& cfg, double h,
                             const PhiRefOptions& opts = {});

/// Re-gated single-viewpoint information gain (gates re-derived per call).
double ig_view_ref(const VoxelMap& map, const FrontierSet& frontiers,
                   const Pose& q, const FuzzyConfig& cfg);

// Central finite differences of ig_view_ref (re-gating every probe).
// `gates_stable` is set to false when any probe's gate pattern differs from
// the primal one; such poses sit on a gate flip and must be excluded.
Eigen::Vector4d fd_grad_view(const VoxelMap& map, const FrontierSet& frontiers,
                             const Pose& q, const FuzzyConfig& cfg, double h,
                             bool* gates_stable);

// Smallest distance, over the given voxel centres, from any piecewise
// boundary of the fuzzy filter: range kinks at r_max and 2 r_max, the
// angular kinks at cos(omega/2), and the degenerate-projection guard.
double min_phi_boundary_margin(const Pose& q, const std::vector<Vec3>& centers,
                               const FuzzyConfig& cfg);

/// First ground-truth hit along a ray by dense marching (step metres).
double first_hit_dense(const Scene& scene, const Vec3& origin, const Vec3& dir,
                       double t_limit, double step);

/// 6-connected flood fill over the map's known-free voxels.
bool reachable_through_free(const VoxelMap& map, const Vec3& from,
                            const Vec3& to);

}  // namespace explore::oracle
