#pragma once

#include <array>

#include "explore/frontier_tracker.h"
#include "explore/geometry.h"
#include "explore/voxel_map.h"

namespace explore {

// Depth camera with a rectangular field of view. The optical axis is the
// camera-frame Z axis, mapped to the world heading of the pose yaw; camera X
// points right, camera Y points down (world -Z). omega_* are full
// field-of-view angles in the camera XZ and YZ planes.
struct CameraModel {
  double r_min = 0.3;
  double r_max = 10.0;
  double omega_xz = M_PI / 2.0;
  double omega_yz = 2.0 * M_PI / 5.0;

  /// Inward unit normals of the four frustum side planes, camera frame.
  std::array<Vec3, 4> frustum_normals() const;
};

// Camera pose with the heading trig precomputed once; the scalar type is
// generic so the same transform serves plain evaluation and forward-mode
// differentiation.
template <typename S>
struct PoseFrame {
  S x, y, z;
  S sin_yaw, cos_yaw;
};

template <typename S>
struct CameraCoords {
  S x, y, z;  // right, down, forward
};

inline PoseFrame<double> make_pose_frame(const Pose& q) {
  return PoseFrame<double>{q.position.x(), q.position.y(), q.position.z(),
                           std::sin(q.yaw), std::cos(q.yaw)};
}

// Rigid world-to-camera transform for the yaw-only pose:
//   x_cam = d . (sin yaw, -cos yaw, 0)
//   y_cam = d . (0, 0, -1)
//   z_cam = d . (cos yaw,  sin yaw, 0)     with d = p - position.
template <typename S>
CameraCoords<S> to_camera_coords(const PoseFrame<S>& q, const Vec3& p) {
  const S dx = S(p.x()) - q.x;
  const S dy = S(p.y()) - q.y;
  const S dz = S(p.z()) - q.z;
  return CameraCoords<S>{dx * q.sin_yaw - dy * q.cos_yaw, -dz,
                         dx * q.cos_yaw + dy * q.sin_yaw};
}

/// World point expressed in the camera frame of pose q.
Vec3 to_camera_frame(const Pose& q, const Vec3& p);
/// Inverse transform: camera-frame point back to world coordinates.
Vec3 from_camera_frame(const Pose& q, const Vec3& p_camera);

// Frustum membership test with the plane normals precomputed, for use in
// per-voxel loops. Operates on camera-frame coordinates.
struct FrustumGate {
  std::array<Vec3, 4> normals;
  double r_min_sq;
  double r_max_sq;

  explicit FrustumGate(const CameraModel& cam)
      : normals(cam.frustum_normals()),
        r_min_sq(cam.r_min * cam.r_min),
        r_max_sq(cam.r_max * cam.r_max) {}

  bool pass(const Vec3& p_camera) const {
    for (const Vec3& n : normals) {
      if (n.dot(p_camera) <= 0.0) {
        return false;
      }
    }
    const double range_sq = p_camera.squaredNorm();
    return range_sq >= r_min_sq && range_sq <= r_max_sq;
  }
};

/// True iff the point passes all four plane gates strictly and lies within
/// the [r_min, r_max] range shell.
bool in_frustum(const CameraModel& cam, const Pose& q, const Vec3& point);
bool in_frustum(const CameraModel& cam, const Pose& q, const VoxelKey& v,
                double rho);

// True iff every voxel on the segment from the camera origin to the centre
// of v (excluding v itself and the camera's own voxel) is strictly free.
// Unknown voxels block.
bool unobstructed(const VoxelMap& map, const Pose& q, const VoxelKey& v);

/// f(q): number of frontier voxels both inside the frustum and unobstructed.
int visible_frontier_count(const VoxelMap& map, const FrontierSet& frontiers,
                           const CameraModel& cam, const Pose& q);

}  // namespace explore
