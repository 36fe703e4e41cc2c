#include "explore/scene.h"

namespace explore {

bool scene_occupied_point(const Scene& scene, const Vec3& p) {
  for (const Aabb& box : scene.obstacles) {
    if (box.contains(p)) {
      return true;
    }
  }
  return false;
}

bool scene_occupied_voxel(const Scene& scene, const VoxelKey& v, double rho) {
  return scene_occupied_point(scene, voxel_center(v, rho));
}

bool scene_free_voxel(const Scene& scene, const VoxelKey& v, double rho) {
  const Vec3 center = voxel_center(v, rho);
  return scene.bounds.contains(center) && !scene_occupied_point(scene, center);
}

namespace scenes {

namespace {

Aabb box(double x0, double y0, double z0, double x1, double y1, double z1) {
  return Aabb{Vec3(x0, y0, z0), Vec3(x1, y1, z1)};
}

// Floor, ceiling and perimeter walls so every ray terminates on structure.
void enclose(Scene& scene, double wall, double slab) {
  const Vec3& lo = scene.bounds.min;
  const Vec3& hi = scene.bounds.max;
  scene.obstacles.push_back(box(lo.x(), lo.y(), lo.z(), hi.x(), hi.y(), lo.z() + slab));
  scene.obstacles.push_back(box(lo.x(), lo.y(), hi.z() - slab, hi.x(), hi.y(), hi.z()));
  const double z0 = lo.z() + slab;
  const double z1 = hi.z() - slab;
  scene.obstacles.push_back(box(lo.x(), lo.y(), z0, hi.x(), lo.y() + wall, z1));
  scene.obstacles.push_back(box(lo.x(), hi.y() - wall, z0, hi.x(), hi.y(), z1));
  scene.obstacles.push_back(box(lo.x(), lo.y(), z0, lo.x() + wall, hi.y(), z1));
  scene.obstacles.push_back(box(hi.x() - wall, lo.y(), z0, hi.x(), hi.y(), z1));
}

}  // namespace

Scene tunnel() {
  Scene s;
  s.name = "tunnel";
  s.bounds = box(0, 0, 0, 30, 15, 3);
  // Floor and ceiling; the S-shaped corridor is carved by the filler blocks
  // below (legs 4.2 m wide, free height 0.3..2.7).
  s.obstacles.push_back(box(0, 0, 0, 30, 15, 0.3));
  s.obstacles.push_back(box(0, 0, 2.7, 30, 15, 3));
  s.obstacles.push_back(box(0, 0, 0.3, 30, 0.6, 2.7));        // south wall
  s.obstacles.push_back(box(0, 4.8, 0.3, 8.4, 15, 2.7));      // north-west fill
  s.obstacles.push_back(box(12.6, 0.6, 0.3, 30, 10.2, 2.7));  // south-east fill
  s.obstacles.push_back(box(8.4, 14.4, 0.3, 30, 15, 2.7));    // north wall
  s.obstacles.push_back(box(0, 0.6, 0.3, 0.6, 4.8, 2.7));     // west cap
  s.obstacles.push_back(box(29.4, 10.2, 0.3, 30, 14.4, 2.7)); // east cap
  return s;
}

Scene lab() {
  Scene s;
  s.name = "lab";
  s.bounds = box(0, 0, 0, 20, 10, 3);
  enclose(s, 0.6, 0.3);
  // Dividing wall with a 1.8 m doorway.
  s.obstacles.push_back(box(9.6, 0.6, 0.3, 10.2, 4.2, 2.7));
  s.obstacles.push_back(box(9.6, 6.0, 0.3, 10.2, 9.4, 2.7));
  // One crate and one pillar.
  s.obstacles.push_back(box(3.0, 6.4, 0.3, 4.2, 7.6, 1.5));
  s.obstacles.push_back(box(15.0, 2.4, 0.3, 15.6, 3.0, 2.7));
  return s;
}

Scene clutter() {
  Scene s;
  s.name = "clutter";
  s.bounds = box(0, 0, 0, 25, 12, 4);
  enclose(s, 0.6, 0.3);
  s.obstacles.push_back(box(4.2, 2.4, 0.3, 5.4, 3.6, 3.7));
  s.obstacles.push_back(box(8.4, 7.2, 0.3, 9.3, 8.4, 3.7));
  s.obstacles.push_back(box(3.0, 8.4, 0.3, 4.8, 9.9, 1.8));
  s.obstacles.push_back(box(11.4, 2.1, 0.3, 13.2, 3.3, 1.5));
  s.obstacles.push_back(box(15.0, 5.4, 0.3, 16.2, 6.6, 3.7));
  s.obstacles.push_back(box(18.0, 8.7, 0.3, 19.8, 10.2, 2.1));
  s.obstacles.push_back(box(20.4, 2.4, 0.3, 21.9, 3.9, 1.2));
  s.obstacles.push_back(box(12.0, 9.0, 0.3, 12.9, 9.9, 3.7));
  s.obstacles.push_back(box(6.6, 4.8, 0.3, 8.1, 5.7, 2.4));
  s.obstacles.push_back(box(16.8, 0.6, 0.3, 17.4, 3.0, 3.7));
  s.obstacles.push_back(box(21.6, 6.0, 0.3, 23.4, 7.5, 1.8));
  s.obstacles.push_back(box(2.4, 5.7, 0.3, 3.3, 6.6, 3.7));
  return s;
}

std::optional<Scene> by_name(std::string_view name) {
  if (name == "tunnel") return tunnel();
  if (name == "lab") return lab();
  if (name == "clutter") return clutter();
  return std::nullopt;
}

}  // namespace scenes

}  // namespace explore
