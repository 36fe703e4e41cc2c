#include "explore/camera_visibility.h"

#include <cmath>

namespace explore {

std::array<Vec3, 4> CameraModel::frustum_normals() const {
  const double ax = 0.5 * omega_xz;
  const double ay = 0.5 * omega_yz;
  return {Vec3(-std::cos(ax), 0.0, std::sin(ax)),
          Vec3(std::cos(ax), 0.0, std::sin(ax)),
          Vec3(0.0, -std::cos(ay), std::sin(ay)),
          Vec3(0.0, std::cos(ay), std::sin(ay))};
}

Vec3 to_camera_frame(const Pose& q, const Vec3& p) {
  const auto c = to_camera_coords(make_pose_frame(q), p);
  return Vec3(c.x, c.y, c.z);
}

Vec3 from_camera_frame(const Pose& q, const Vec3& p_camera) {
  const double s = std::sin(q.yaw);
  const double c = std::cos(q.yaw);
  // Columns of the camera-to-world rotation: X=(s,-c,0), Y=(0,0,-1), Z=(c,s,0).
  return q.position + Vec3(s * p_camera.x() + c * p_camera.z(),
                           -c * p_camera.x() + s * p_camera.z(),
                           -p_camera.y());
}

bool in_frustum(const CameraModel& cam, const Pose& q, const Vec3& point) {
  return FrustumGate(cam).pass(to_camera_frame(q, point));
}

bool in_frustum(const CameraModel& cam, const Pose& q, const VoxelKey& v,
                double rho) {
  return in_frustum(cam, q, voxel_center(v, rho));
}

bool unobstructed(const VoxelMap& map, const Pose& q, const VoxelKey& v) {
  const double rho = map.resolution();
  const VoxelKey camera_key = key_of(q.position, rho);
  for (const VoxelKey& cell :
       raycast_voxels(q.position, voxel_center(v, rho), rho)) {
    if (cell == camera_key) continue;
    if (!map.is_free(cell)) {
      return false;
    }
  }
  return true;
}

int visible_frontier_count(const VoxelMap& map, const FrontierSet& frontiers,
                           const CameraModel& cam, const Pose& q) {
  int count = 0;
  for (const VoxelKey& v : frontiers.keys()) {
    if (in_frustum(cam, q, v, map.resolution()) && unobstructed(map, q, v)) {
      ++count;
    }
  }
  return count;
}

}  // namespace explore
