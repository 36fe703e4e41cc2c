#include "explore/voxel_map.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace explore {

VoxelKey key_of(const Vec3& p, double rho) {
  return VoxelKey{static_cast<int32_t>(std::floor(p.x() / rho)),
                  static_cast<int32_t>(std::floor(p.y() / rho)),
                  static_cast<int32_t>(std::floor(p.z() / rho))};
}

Vec3 voxel_center(const VoxelKey& key, double rho) {
  return Vec3((key.i + 0.5) * rho, (key.j + 0.5) * rho, (key.k + 0.5) * rho);
}

std::vector<VoxelKey> traverse_segment(const Vec3& origin, const Vec3& endpoint,
                                       double rho) {
  VoxelKey cur = key_of(origin, rho);
  const VoxelKey end = key_of(endpoint, rho);

  std::vector<VoxelKey> out;
  out.push_back(cur);
  if (cur == end) {
    return out;
  }

  const Vec3 d = endpoint - origin;
  int32_t* cell[3] = {&cur.i, &cur.j, &cur.k};
  int step[3];
  double t_max[3];
  double t_delta[3];
  for (int a = 0; a < 3; ++a) {
    if (d[a] > 0.0) {
      step[a] = 1;
      t_max[a] = ((*cell[a] + 1) * rho - origin[a]) / d[a];
      t_delta[a] = rho / d[a];
    } else if (d[a] < 0.0) {
      step[a] = -1;
      t_max[a] = (*cell[a] * rho - origin[a]) / d[a];
      t_delta[a] = -rho / d[a];
    } else {
      step[a] = 0;
      t_max[a] = std::numeric_limits<double>::infinity();
      t_delta[a] = std::numeric_limits<double>::infinity();
    }
  }

  const int guard = std::abs(end.i - cur.i) + std::abs(end.j - cur.j) +
                    std::abs(end.k - cur.k);
  for (int n = 0; n < guard; ++n) {
    int axis = 0;
    if (t_max[1] < t_max[axis]) axis = 1;
    if (t_max[2] < t_max[axis]) axis = 2;
    *cell[axis] += step[axis];
    t_max[axis] += t_delta[axis];
    out.push_back(cur);
    if (cur == end) {
      break;
    }
  }
  if (out.back() != end) {
    out.push_back(end);
  }
  return out;
}

std::vector<VoxelKey> raycast_voxels(const Vec3& origin, const Vec3& endpoint,
                                     double rho) {
  std::vector<VoxelKey> cells = traverse_segment(origin, endpoint, rho);
  cells.pop_back();  // the endpoint voxel is always last
  return cells;
}

VoxelMap::VoxelMap(const VoxelMapConfig& config, const Aabb& bounds)
    : config_(config), bounds_(bounds) {
  if (config.rho <= 0.0) {
    throw std::invalid_argument("VoxelMap: resolution must be positive");
  }
  if (config.l_hit <= 0.0 || config.l_miss >= 0.0 ||
      config.l_min >= config.l_max) {
    throw std::invalid_argument("VoxelMap: invalid log-odds increments");
  }
}

double VoxelMap::log_odds(const VoxelKey& key) const {
  const auto it = store_.find(key);
  return it == store_.end() ? 0.0 : it->second;
}

double VoxelMap::occupancy(const VoxelKey& key) const {
  return 1.0 / (1.0 + std::exp(-log_odds(key)));
}

bool VoxelMap::is_free(const VoxelKey& key) const {
  const auto it = store_.find(key);
  return it != store_.end() && it->second < 0.0;
}

bool VoxelMap::is_occupied(const VoxelKey& key) const {
  const auto it = store_.find(key);
  return it != store_.end() && it->second > 0.0;
}

bool VoxelMap::is_unknown(const VoxelKey& key) const {
  const auto it = store_.find(key);
  return it == store_.end() || it->second == 0.0;
}

bool VoxelMap::in_bounds(const VoxelKey& key) const {
  return bounds_.contains(voxel_center(key, config_.rho));
}

std::vector<VoxelKey> VoxelMap::integrate_ray(const Vec3& origin,
                                              const Vec3& endpoint, bool hit) {
  if (!bounds_.contains(origin) || !bounds_.contains(endpoint)) {
    std::ostringstream msg;
    msg << "integrate_ray: segment endpoint outside map bounds ("
        << origin.transpose() << ") -> (" << endpoint.transpose() << ")";
    throw std::out_of_range(msg.str());
  }
  std::vector<VoxelKey> cells = traverse_segment(origin, endpoint, config_.rho);
  for (std::size_t n = 0; n < cells.size(); ++n) {
    const bool at_endpoint = (n + 1 == cells.size());
    const double increment =
        (at_endpoint && hit) ? config_.l_hit : config_.l_miss;
    double& l = store_[cells[n]];
    l = std::clamp(l + increment, config_.l_min, config_.l_max);
  }
  return cells;
}

void VoxelMap::set_log_odds(const VoxelKey& key, double value) {
  if (!in_bounds(key)) {
    throw std::out_of_range("set_log_odds: voxel outside map bounds");
  }
  store_[key] = std::clamp(value, config_.l_min, config_.l_max);
}

std::vector<VoxelKey> VoxelMap::free_keys_sorted() const {
  std::vector<VoxelKey> keys;
  for (const auto& [key, l] : store_) {
    if (l < 0.0) {
      keys.push_back(key);
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace explore
