#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "explore/geometry.h"

namespace explore {

// Integer grid index of one rho-cube. key_of() floors, so negative
// coordinates key consistently; the cube owned by a key is the half-open box
// [key * rho, (key + 1) * rho).
struct VoxelKey {
  int32_t i = 0;
  int32_t j = 0;
  int32_t k = 0;

  friend bool operator==(const VoxelKey&, const VoxelKey&) = default;
  friend auto operator<=>(const VoxelKey&, const VoxelKey&) = default;
};

struct VoxelKeyHash {
  std::size_t operator()(const VoxelKey& key) const {
    const uint64_t h =
        static_cast<uint64_t>(static_cast<uint32_t>(key.i)) * 73856093ULL ^
        static_cast<uint64_t>(static_cast<uint32_t>(key.j)) * 19349669ULL ^
        static_cast<uint64_t>(static_cast<uint32_t>(key.k)) * 83492791ULL;
    return static_cast<std::size_t>(h);
  }
};

VoxelKey key_of(const Vec3& p, double rho);
Vec3 voxel_center(const VoxelKey& key, double rho);

// All voxels pierced by the segment, ordered from the origin outward and
// including both end voxels. Grid-stepping traversal; each voxel appears
// once.
std::vector<VoxelKey> traverse_segment(const Vec3& origin, const Vec3& endpoint,
                                       double rho);

// Voxels pierced by the open segment excluding the endpoint's own voxel,
// ordered from the origin outward.
std::vector<VoxelKey> raycast_voxels(const Vec3& origin, const Vec3& endpoint,
                                     double rho);

struct VoxelMapConfig {
  double rho = 0.3;
  double l_hit = 0.85;
  double l_miss = -0.4;
  double l_min = -2.0;
  double l_max = 3.5;
};

// Uniform-resolution probabilistic occupancy map storing clamped log-odds
// per voxel. Absent voxels are unknown (occupancy 0.5); a stored value of
// exactly zero is also classified unknown.
class VoxelMap {
 public:
  using Store = std::unordered_map<VoxelKey, double, VoxelKeyHash>;

  VoxelMap(const VoxelMapConfig& config, const Aabb& bounds);

  double resolution() const { return config_.rho; }
  const VoxelMapConfig& config() const { return config_; }
  const Aabb& bounds() const { return bounds_; }
  const Store& store() const { return store_; }

  /// Stored log-odds, or 0 when the voxel is absent.
  double log_odds(const VoxelKey& key) const;
  /// Occupancy probability: logistic of the stored log-odds, 0.5 if absent.
  double occupancy(const VoxelKey& key) const;

  bool is_free(const VoxelKey& key) const;
  bool is_occupied(const VoxelKey& key) const;
  bool is_unknown(const VoxelKey& key) const;

  /// True when the voxel's centre lies inside the map bounds.
  bool in_bounds(const VoxelKey& key) const;

  // Applies one sensor ray with the binary Bayes update: every voxel pierced
  // before the endpoint voxel receives l_miss; the endpoint voxel receives
  // l_hit when `hit` is set, l_miss otherwise. Results clamp to
  // [l_min, l_max]. Returns the visited keys. Throws std::out_of_range when
  // either end lies outside the map bounds.
  std::vector<VoxelKey> integrate_ray(const Vec3& origin, const Vec3& endpoint,
                                      bool hit);

  /// Directly sets a voxel's log-odds (clamped). Throws when out of bounds.
  void set_log_odds(const VoxelKey& key, double value);

  /// Keys of all free voxels in deterministic (lexicographic) order.
  std::vector<VoxelKey> free_keys_sorted() const;

 private:
  VoxelMapConfig config_;
  Aabb bounds_;
  Store store_;
};

}  // namespace explore
