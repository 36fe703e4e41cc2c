#pragma once

#include <Eigen/Core>

#include "explore/ad_scalar.h"
#include "explore/camera_visibility.h"
#include "explore/global_planner.h"

namespace explore {

// Parameters of the fuzzy visibility filter. Scoring is restricted to the
// camera-frame cube of edge 4 * r_max; beyond that the filter is identically
// zero anyway.
struct FuzzyConfig {
  double r_max = 10.0;
  double omega_xz = M_PI / 2.0;
  double omega_yz = 2.0 * M_PI / 5.0;

  double cube_edge() const { return 4.0 * r_max; }

  static FuzzyConfig from_camera(const CameraModel& cam) {
    return FuzzyConfig{cam.r_max, cam.omega_xz, cam.omega_yz};
  }
};

// Below this projection length a voxel counts as exactly on-axis and the
// rotational filter returns 1.
inline constexpr double kDegenerateProjection = 1e-9;

// Translational filter, piecewise linear in the camera-frame range delta:
// 1 below r_max, falling to 0 at 2 * r_max. At the kinks the flat-side
// (zero) derivative is used.
template <typename S>
S phi_d_kernel(const CameraCoords<S>& c, double r_max) {
  using std::sqrt;
  const S delta_sq = c.x * c.x + c.y * c.y + c.z * c.z;
  const double primal_delta = std::sqrt(ad::primal(delta_sq));
  if (primal_delta <= r_max) {
    return S(1.0);
  }
  if (primal_delta >= 2.0 * r_max) {
    return S(0.0);
  }
  return S(2.0) - sqrt(delta_sq) / S(r_max);
}

// Rotational filter on one camera-plane projection (lateral, forward): 1
// inside the half-angle cone, decaying linearly in <u, w> to 0 at the
// opposite direction. Degenerate (zero-length) projections count as on-axis.
template <typename S>
S phi_theta_kernel(const S& lateral, const S& forward, double omega) {
  using std::sqrt;
  const double px = ad::primal(lateral);
  const double pz = ad::primal(forward);
  const double len_sq = px * px + pz * pz;
  if (len_sq <= kDegenerateProjection * kDegenerateProjection) {
    return S(1.0);
  }
  const double cos_half = std::cos(0.5 * omega);
  if (pz >= cos_half * std::sqrt(len_sq)) {
    return S(1.0);
  }
  const S cos_angle = forward / sqrt(lateral * lateral + forward * forward);
  return (S(1.0) + cos_angle) / S(1.0 + cos_half);
}

// Phi: product of the translational filter and the two rotational filters
// on the XZ and YZ projections. Equals 1 exactly inside the frustum's range
// and angle gates (r_min excluded) and 0 beyond 2 * r_max.
template <typename S>
S fuzzy_filter_kernel(const CameraCoords<S>& c, const FuzzyConfig& cfg) {
  const S pd = phi_d_kernel(c, cfg.r_max);
  if (ad::primal(pd) == 0.0) {
    return S(0.0);  // flat region: value and partials are exactly zero
  }
  const S t_xz = phi_theta_kernel(c.x, c.z, cfg.omega_xz);
  const S t_yz = phi_theta_kernel(c.y, c.z, cfg.omega_yz);
  return pd * t_xz * t_yz;
}

// A pose whose four coordinates are AdScalars, for differentiating through
// the camera transform.
struct AdPose {
  ad::AdScalar x, y, z, yaw;
};

/// Seeds the pose coordinates as variables offset..offset+3 of `dim` total.
AdPose seed_pose(const Pose& q, std::size_t offset = 0, std::size_t dim = 4);

ad::AdScalar phi_d(const AdPose& q, const Vec3& point, const FuzzyConfig& cfg);
ad::AdScalar phi_theta(const ad::AdScalar& lateral, const ad::AdScalar& forward,
                       double omega);
ad::AdScalar fuzzy_filter(const AdPose& q, const Vec3& point,
                          const FuzzyConfig& cfg);

// Differentiable information gain of a single viewpoint: sum of
// 1_B(q)(v) * Phi(q, v) over frontier voxels inside the camera-frame cube.
// The occlusion and cube gates are evaluated at the primal pose and frozen.
// Partials are with respect to (x, y, z, yaw).
ad::AdScalar ig_view(const VoxelMap& map, const FrontierSet& frontiers,
                     const Pose& q, const FuzzyConfig& cfg);

// Path information gain: interior viewpoints scored in order; a frontier
// voxel strictly inside the true frustum of a viewpoint is erased from the
// working set so it is counted at most once. Partials are with respect to
// the 4 * (n - 2) interior coordinates.
ad::AdScalar ig_path(const VoxelMap& map, const FrontierSet& frontiers,
                     const CameraModel& cam, const Path& path,
                     const FuzzyConfig& cfg);

/// Gradient of ig_path as a vector of the 4 * (n - 2) interior coordinates.
Eigen::VectorXd grad_ig_path(const VoxelMap& map, const FrontierSet& frontiers,
                             const CameraModel& cam, const Path& path,
                             const FuzzyConfig& cfg);

/// Value-only evaluation of ig_path (no derivative work).
double ig_path_value(const VoxelMap& map, const FrontierSet& frontiers,
                     const CameraModel& cam, const Path& path,
                     const FuzzyConfig& cfg);

// Sampled cross-section of Phi over a camera-frame plane ("xz" or "yz"),
// spanning the 4 * r_max cube with `samples` points per axis; row-major CSV
// rows run along the first plane axis.
std::string phi_cross_section_csv(const FuzzyConfig& cfg,
                                  const std::string& plane, int samples = 81);

}  // namespace explore
