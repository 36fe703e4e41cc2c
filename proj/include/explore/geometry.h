#pragma once

#include <Eigen/Core>

#include <cmath>

namespace explore {

using Vec3 = Eigen::Vector3d;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double theta) {
  double w = std::fmod(theta + M_PI, 2.0 * M_PI);
  if (w <= 0.0) {
    w += 2.0 * M_PI;
  }
  return w - M_PI;
}

/// Axis-aligned box with min <= max componentwise.
struct Aabb {
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Zero();

  bool contains(const Vec3& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }

  bool intersects(const Aabb& other) const {
    return (min.array() <= other.max.array()).all() &&
           (max.array() >= other.min.array()).all();
  }

  Vec3 extent() const { return max - min; }
  Vec3 center() const { return 0.5 * (min + max); }

  static Aabb centered(const Vec3& center, const Vec3& extent) {
    return Aabb{center - 0.5 * extent, center + 0.5 * extent};
  }
};

/// 4-DOF viewpoint: position plus yaw about the world Z axis.
struct Pose {
  Vec3 position = Vec3::Zero();
  double yaw = 0.0;

  Pose() = default;
  Pose(double x, double y, double z, double yaw_in)
      : position(x, y, z), yaw(yaw_in) {}
  Pose(const Vec3& p, double yaw_in) : position(p), yaw(yaw_in) {}

  Pose normalized() const { return Pose(position, wrap_angle(yaw)); }
};

// Position distance plus weighted wrapped-yaw distance. The 0.1 weight keeps
// the same translation/rotation ratio as the optimizer's W matrix.
inline double pose_distance(const Pose& a, const Pose& b,
                            double yaw_weight = 0.1) {
  return (a.position - b.position).norm() +
         yaw_weight * std::abs(wrap_angle(a.yaw - b.yaw));
}

}  // namespace explore
