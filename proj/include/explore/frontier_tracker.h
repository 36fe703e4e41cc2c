#pragma once

#include <unordered_set>
#include <vector>

#include "explore/voxel_map.h"

namespace explore {

// Set of frontier voxels: unknown voxels inside the map bounds with at least
// one free voxel among their 26 neighbours. Maintained incrementally after
// each scan; rebuild_frontiers() is the batch reference.
class FrontierSet {
 public:
  using Keys = std::unordered_set<VoxelKey, VoxelKeyHash>;

  explicit FrontierSet(double rho) : rho_(rho) {}

  double resolution() const { return rho_; }
  const Keys& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  bool contains(const VoxelKey& key) const { return keys_.count(key) > 0; }

  void insert(const VoxelKey& key) { keys_.insert(key); }
  void erase(const VoxelKey& key) { keys_.erase(key); }

  /// Keys in deterministic (lexicographic) order.
  std::vector<VoxelKey> sorted_keys() const;

 private:
  double rho_;
  Keys keys_;
};

// One-voxel-thick shell surrounding a cubic leaf cell of edge k * rho
// anchored (min corner) at `cell`. Shell size is (k+2)^3 - k^3. Throws
// std::invalid_argument unless leaf_edge is a positive integer multiple of
// rho.
std::vector<VoxelKey> surrounding_shell(const VoxelKey& cell, double leaf_edge,
                                        double rho);

/// True when `key` is a frontier voxel of `map`.
bool is_frontier_voxel(const VoxelMap& map, const VoxelKey& key);

/// Scans every free voxel's shell; the batch reference for the tracker.
FrontierSet rebuild_frontiers(const VoxelMap& map);

// Incremental maintenance: re-derives frontier status for every voxel whose
// status may have changed, i.e. the touched voxels and their 26-shells.
// `touched` must cover all voxels whose occupancy changed in the last
// integration.
void update_after_scan(FrontierSet& frontiers, const VoxelMap& map,
                       const std::vector<VoxelKey>& touched);

}  // namespace explore
