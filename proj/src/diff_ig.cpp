#include "explore/diff_ig.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace explore {

namespace {

PoseFrame<ad::Dual4> make_dual_frame(const Pose& q) {
  using ad::Dual4;
  const Dual4 yaw = Dual4::variable(q.yaw, 3);
  return PoseFrame<Dual4>{Dual4::variable(q.position.x(), 0),
                          Dual4::variable(q.position.y(), 1),
                          Dual4::variable(q.position.z(), 2), sin(yaw),
                          cos(yaw)};
}

bool inside_cube(const CameraCoords<double>& c, double half_edge) {
  return std::abs(c.x) <= half_edge && std::abs(c.y) <= half_edge &&
         std::abs(c.z) <= half_edge;
}

// Shared Algorithm-2 walk over the interior viewpoints. The cube and
// occlusion gates and the erasure decision are taken at the primal poses;
// when WithGrad is set, each surviving contribution is re-evaluated with a
// per-viewpoint Dual4 and its partials scattered into the path gradient.
template <bool WithGrad>
double accumulate_path(const VoxelMap& map, const FrontierSet& frontiers,
                       const CameraModel& cam, const Path& path,
                       const FuzzyConfig& cfg, Eigen::VectorXd* gradient) {
  if (path.size() < 2) {
    throw std::invalid_argument("ig_path: path needs at least two poses");
  }
  const double rho = map.resolution();
  const double half_edge = 0.5 * cfg.cube_edge();
  const FrustumGate frustum(cam);

  std::vector<VoxelKey> working = frontiers.sorted_keys();
  std::vector<VoxelKey> survivors;
  double value = 0.0;

  for (std::size_t vi = 1; vi + 1 < path.size(); ++vi) {
    const Pose& q = path[vi];
    const PoseFrame<double> primal_frame = make_pose_frame(q);
    PoseFrame<ad::Dual4> dual_frame;
    if constexpr (WithGrad) {
      dual_frame = make_dual_frame(q);
    }

    survivors.clear();
    survivors.reserve(working.size());
    for (const VoxelKey& v : working) {
      const Vec3 center = voxel_center(v, rho);
      const CameraCoords<double> c = to_camera_coords(primal_frame, center);
      if (inside_cube(c, half_edge) && unobstructed(map, q, v)) {
        if constexpr (WithGrad) {
          const ad::Dual4 phi =
              fuzzy_filter_kernel(to_camera_coords(dual_frame, center), cfg);
          value += phi.v;
          for (int a = 0; a < 4; ++a) {
            (*gradient)[4 * (vi - 1) + a] += phi.d[a];
          }
        } else {
          value += fuzzy_filter_kernel(c, cfg);
        }
        if (frustum.pass(Vec3(c.x, c.y, c.z))) {
          continue;  // fully seen: erased from the working set
        }
      }
      survivors.push_back(v);
    }
    working.swap(survivors);
  }
  return value;
}

}  // namespace

AdPose seed_pose(const Pose& q, std::size_t offset, std::size_t dim) {
  using ad::AdScalar;
  return AdPose{AdScalar::variable(q.position.x(), offset + 0, dim),
                AdScalar::variable(q.position.y(), offset + 1, dim),
                AdScalar::variable(q.position.z(), offset + 2, dim),
                AdScalar::variable(q.yaw, offset + 3, dim)};
}

namespace {

PoseFrame<ad::AdScalar> make_ad_frame(const AdPose& q) {
  return PoseFrame<ad::AdScalar>{q.x, q.y, q.z, sin(q.yaw), cos(q.yaw)};
}

}  // namespace

ad::AdScalar phi_d(const AdPose& q, const Vec3& point, const FuzzyConfig& cfg) {
  return phi_d_kernel(to_camera_coords(make_ad_frame(q), point), cfg.r_max);
}

ad::AdScalar phi_theta(const ad::AdScalar& lateral, const ad::AdScalar& forward,
                       double omega) {
  return phi_theta_kernel(lateral, forward, omega);
}

ad::AdScalar fuzzy_filter(const AdPose& q, const Vec3& point,
                          const FuzzyConfig& cfg) {
  return fuzzy_filter_kernel(to_camera_coords(make_ad_frame(q), point), cfg);
}

ad::AdScalar ig_view(const VoxelMap& map, const FrontierSet& frontiers,
                     const Pose& q, const FuzzyConfig& cfg) {
  const double rho = map.resolution();
  const double half_edge = 0.5 * cfg.cube_edge();
  const PoseFrame<double> primal_frame = make_pose_frame(q);
  const PoseFrame<ad::Dual4> dual_frame = make_dual_frame(q);

  ad::Dual4 sum(0.0);
  for (const VoxelKey& v : frontiers.sorted_keys()) {
    const Vec3 center = voxel_center(v, rho);
    const CameraCoords<double> c = to_camera_coords(primal_frame, center);
    if (!inside_cube(c, half_edge) || !unobstructed(map, q, v)) {
      continue;
    }
    sum += fuzzy_filter_kernel(to_camera_coords(dual_frame, center), cfg);
  }
  return ad::AdScalar(sum.v,
                      ad::AdScalar::Partials(sum.d.begin(), sum.d.end()));
}

ad::AdScalar ig_path(const VoxelMap& map, const FrontierSet& frontiers,
                     const CameraModel& cam, const Path& path,
                     const FuzzyConfig& cfg) {
  const std::size_t n_free =
      path.size() > 2 ? 4 * (path.size() - 2) : 0;
  Eigen::VectorXd gradient = Eigen::VectorXd::Zero(n_free);
  const double value =
      accumulate_path<true>(map, frontiers, cam, path, cfg, &gradient);
  return ad::AdScalar(
      value, ad::AdScalar::Partials(gradient.data(),
                                    gradient.data() + gradient.size()));
}

Eigen::VectorXd grad_ig_path(const VoxelMap& map, const FrontierSet& frontiers,
                             const CameraModel& cam, const Path& path,
                             const FuzzyConfig& cfg) {
  const std::size_t n_free =
      path.size() > 2 ? 4 * (path.size() - 2) : 0;
  Eigen::VectorXd gradient = Eigen::VectorXd::Zero(n_free);
  accumulate_path<true>(map, frontiers, cam, path, cfg, &gradient);
  return gradient;
}

double ig_path_value(const VoxelMap& map, const FrontierSet& frontiers,
                     const CameraModel& cam, const Path& path,
                     const FuzzyConfig& cfg) {
  return accumulate_path<false>(map, frontiers, cam, path, cfg, nullptr);
}

std::string phi_cross_section_csv(const FuzzyConfig& cfg,
                                  const std::string& plane, int samples) {
  if (plane != "xz" && plane != "yz") {
    throw std::invalid_argument("phi_cross_section_csv: plane must be xz or yz");
  }
  if (samples < 2) {
    throw std::invalid_argument("phi_cross_section_csv: need >= 2 samples");
  }
  const double half = 0.5 * cfg.cube_edge();
  std::string out;
  char buf[32];
  for (int r = 0; r < samples; ++r) {
    const double lateral = -half + cfg.cube_edge() * r / (samples - 1);
    for (int col = 0; col < samples; ++col) {
      const double forward = -half + cfg.cube_edge() * col / (samples - 1);
      const CameraCoords<double> c =
          plane == "xz" ? CameraCoords<double>{lateral, 0.0, forward}
                        : CameraCoords<double>{0.0, lateral, forward};
      std::snprintf(buf, sizeof(buf), "%.6g", fuzzy_filter_kernel(c, cfg));
      if (col > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace explore
