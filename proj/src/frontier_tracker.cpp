#include "explore/frontier_tracker.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace explore {

std::vector<VoxelKey> FrontierSet::sorted_keys() const {
  std::vector<VoxelKey> out(keys_.begin(), keys_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VoxelKey> surrounding_shell(const VoxelKey& cell, double leaf_edge,
                                        double rho) {
  const double ratio = leaf_edge / rho;
  const int k = static_cast<int>(std::lround(ratio));
  if (k < 1 || std::abs(ratio - k) > 1e-9) {
    throw std::invalid_argument(
        "surrounding_shell: leaf_edge must be a positive integer multiple of "
        "rho");
  }
  std::vector<VoxelKey> shell;
  shell.reserve(static_cast<std::size_t>((k + 2) * (k + 2) * (k + 2) - k * k * k));
  for (int di = -1; di <= k; ++di) {
    for (int dj = -1; dj <= k; ++dj) {
      for (int dk = -1; dk <= k; ++dk) {
        const bool interior = di >= 0 && di < k && dj >= 0 && dj < k &&
                              dk >= 0 && dk < k;
        if (!interior) {
          shell.push_back(VoxelKey{cell.i + di, cell.j + dj, cell.k + dk});
        }
      }
    }
  }
  return shell;
}

bool is_frontier_voxel(const VoxelMap& map, const VoxelKey& key) {
  if (!map.is_unknown(key) || !map.in_bounds(key)) {
    return false;
  }
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      for (int dk = -1; dk <= 1; ++dk) {
        if (di == 0 && dj == 0 && dk == 0) continue;
        if (map.is_free(VoxelKey{key.i + di, key.j + dj, key.k + dk})) {
          return true;
        }
      }
    }
  }
  return false;
}

FrontierSet rebuild_frontiers(const VoxelMap& map) {
  FrontierSet frontiers(map.resolution());
  for (const auto& [key, l] : map.store()) {
    if (l >= 0.0) continue;
    for (const VoxelKey& neighbour :
         surrounding_shell(key, map.resolution(), map.resolution())) {
      if (map.is_unknown(neighbour) && map.in_bounds(neighbour)) {
        frontiers.insert(neighbour);
      }
    }
  }
  return frontiers;
}

void update_after_scan(FrontierSet& frontiers, const VoxelMap& map,
                       const std::vector<VoxelKey>& touched) {
  // Frontier status depends only on a voxel's own occupancy and that of its
  // 26 neighbours, so only touched voxels and their shells can change.
  FrontierSet::Keys affected;
  for (const VoxelKey& key : touched) {
    affected.insert(key);
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        for (int dk = -1; dk <= 1; ++dk) {
          affected.insert(VoxelKey{key.i + di, key.j + dj, key.k + dk});
        }
      }
    }
  }
  for (const VoxelKey& key : affected) {
    if (is_frontier_voxel(map, key)) {
      frontiers.insert(key);
    } else {
      frontiers.erase(key);
    }
  }
}

}  // namespace explore
