#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "explore/voxel_map.h"

namespace explore {

// Ground-truth world: an axis-aligned bounding region with box obstacles.
// Free space is the bounds minus the obstacles, voxelised at the map
// resolution using voxel centres.
struct Scene {
  std::string name;
  Aabb bounds;
  std::vector<Aabb> obstacles;
};

/// True when the point lies inside any obstacle box.
bool scene_occupied_point(const Scene& scene, const Vec3& p);

/// Ground-truth voxel classification by the voxel centre.
bool scene_occupied_voxel(const Scene& scene, const VoxelKey& v, double rho);
bool scene_free_voxel(const Scene& scene, const VoxelKey& v, double rho);

namespace scenes {

// Bundled desk-scale environments. Perimeter walls are explicit obstacle
// boxes so every sensor ray terminates on ground-truth structure.
Scene tunnel();   // bent corridor, 4 m wide legs
Scene lab();      // two rooms joined by a doorway
Scene clutter();  // open hall with scattered box obstacles

std::optional<Scene> by_name(std::string_view name);

}  // namespace scenes

}  // namespace explore
