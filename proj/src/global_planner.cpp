#include "explore/global_planner.h"

#include <cmath>
#include <limits>

namespace explore {

double path_position_length(const Path& path) {
  double length = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    length += (path[i].position - path[i - 1].position).norm();
  }
  return length;
}

bool position_occupied_free(const VoxelMap& map, const Vec3& position,
                            const SafetyZones& zones) {
  if (!map.bounds().contains(position)) {
    return false;
  }
  for (const VoxelKey& v :
       zone_voxels(position, zones.red_extent, map.resolution())) {
    if (map.is_occupied(v)) {
      return false;
    }
  }
  return true;
}

namespace {

bool edge_occupied_free(const VoxelMap& map, const Vec3& a, const Vec3& b,
                        const SafetyZones& zones, double spacing) {
  const double length = (b - a).norm();
  const int segments = std::max(1, static_cast<int>(std::ceil(length / spacing)));
  for (int s = 0; s <= segments; ++s) {
    const Vec3 p = a + (b - a) * (static_cast<double>(s) / segments);
    if (!position_occupied_free(map, p, zones)) {
      return false;
    }
  }
  return true;
}

struct TreeNode {
  Vec3 position;
  int parent;
};

}  // namespace

std::optional<Path> plan_rrt(const VoxelMap& map, const Pose& start,
                             const Pose& goal, const SafetyZones& zones,
                             const RrtConfig& config, std::mt19937_64& rng) {
  if (!position_occupied_free(map, start.position, zones) ||
      !position_occupied_free(map, goal.position, zones)) {
    return std::nullopt;
  }

  const std::vector<VoxelKey> free = map.free_keys_sorted();
  if (free.empty()) {
    return std::nullopt;
  }
  std::uniform_int_distribution<std::size_t> pick_voxel(0, free.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<TreeNode> nodes{{start.position, -1}};
  for (int iteration = 0; iteration < config.max_iterations; ++iteration) {
    const Vec3 target =
        unit(rng) < config.goal_bias
            ? goal.position
            : voxel_center(free[pick_voxel(rng)], map.resolution());

    int nearest = 0;
    double nearest_dist = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const double d = (nodes[n].position - target).norm();
      if (d < nearest_dist) {
        nearest_dist = d;
        nearest = static_cast<int>(n);
      }
    }
    if (nearest_dist < 1e-9) {
      continue;
    }

    const Vec3 from = nodes[nearest].position;
    const Vec3 to =
        from + (target - from) * std::min(1.0, config.step / nearest_dist);
    if (!edge_occupied_free(map, from, to, zones, config.edge_check_spacing)) {
      continue;
    }
    nodes.push_back({to, nearest});

    if ((to - goal.position).norm() <= config.goal_tolerance &&
        edge_occupied_free(map, to, goal.position, zones,
                           config.edge_check_spacing)) {
      std::vector<Vec3> positions{goal.position};
      for (int n = static_cast<int>(nodes.size()) - 1; n >= 0;
           n = nodes[n].parent) {
        positions.push_back(nodes[n].position);
      }
      std::reverse(positions.begin(), positions.end());

      Path path;
      path.reserve(positions.size());
      path.push_back(start);
      for (std::size_t i = 1; i + 1 < positions.size(); ++i) {
        const Vec3 direction = positions[i] - positions[i - 1];
        path.emplace_back(positions[i],
                          std::atan2(direction.y(), direction.x()));
      }
      path.push_back(goal);
      return path;
    }
  }
  return std::nullopt;
}

Path densify(const Path& path, double d_max) {
  if (d_max <= 0.0) {
    throw std::invalid_argument("densify: d_max must be positive");
  }
  if (path.size() < 2) {
    return path;
  }
  Path dense;
  dense.push_back(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Pose& a = path[i - 1];
    const Pose& b = path[i];
    const double length = (b.position - a.position).norm();
    const int pieces = std::max(1, static_cast<int>(std::ceil(length / d_max)));
    const double yaw_step = wrap_angle(b.yaw - a.yaw);
    for (int s = 1; s < pieces; ++s) {
      const double t = static_cast<double>(s) / pieces;
      dense.emplace_back(a.position + t * (b.position - a.position),
                         wrap_angle(a.yaw + t * yaw_step));
    }
    dense.push_back(b);
  }
  return dense;
}

}  // namespace explore
