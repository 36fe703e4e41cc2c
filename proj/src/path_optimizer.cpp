#include "explore/path_optimizer.h"

#include <cmath>

namespace explore {

ad::AdScalar path_length_cost(const Path& path, const Eigen::Vector4d& w) {
  using ad::AdScalar;
  if (path.size() < 2) {
    throw std::invalid_argument("path_length_cost: path needs >= 2 poses");
  }
  const std::size_t n = path.size();
  const std::size_t dim = n > 2 ? 4 * (n - 2) : 0;

  // Interior pose coordinates are the free variables; endpoints are
  // constants.
  const auto coords = [&](std::size_t i) -> std::array<AdScalar, 4> {
    const Pose& q = path[i];
    if (i == 0 || i + 1 == n) {
      return {AdScalar(q.position.x()), AdScalar(q.position.y()),
              AdScalar(q.position.z()), AdScalar(q.yaw)};
    }
    const std::size_t offset = 4 * (i - 1);
    return {AdScalar::variable(q.position.x(), offset + 0, dim),
            AdScalar::variable(q.position.y(), offset + 1, dim),
            AdScalar::variable(q.position.z(), offset + 2, dim),
            AdScalar::variable(q.yaw, offset + 3, dim)};
  };

  AdScalar cost(0.0);
  std::array<AdScalar, 4> prev = coords(0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::array<AdScalar, 4> cur = coords(i);
    for (int a = 0; a < 3; ++a) {
      const AdScalar d = cur[a] - prev[a];
      cost += AdScalar(w[a]) * d * d;
    }
    const AdScalar dyaw = wrap_angle(cur[3] - prev[3]);
    cost += AdScalar(w[3]) * dyaw * dyaw;
    prev = cur;
  }
  return cost;
}

namespace {

Path path_with_interior(const Path& base, const Eigen::VectorXd& theta) {
  Path path = base;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const std::size_t o = 4 * (i - 1);
    path[i].position = Vec3(theta[o], theta[o + 1], theta[o + 2]);
    path[i].yaw = wrap_angle(theta[o + 3]);
  }
  return path;
}

Eigen::VectorXd interior_vector(const Path& path) {
  const std::size_t dim = path.size() > 2 ? 4 * (path.size() - 2) : 0;
  Eigen::VectorXd theta(dim);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const std::size_t o = 4 * (i - 1);
    theta[o] = path[i].position.x();
    theta[o + 1] = path[i].position.y();
    theta[o + 2] = path[i].position.z();
    theta[o + 3] = path[i].yaw;
  }
  return theta;
}

}  // namespace

OptimizeResult optimize_path(const VoxelMap& map, const FrontierSet& frontiers,
                             const CameraModel& cam, const Path& path,
                             const ObjectiveWeights& weights,
                             const FuzzyConfig& cfg,
                             const OptimizeOptions& options) {
  if (path.size() < 2) {
    throw std::invalid_argument("optimize_path: path needs >= 2 poses");
  }

  OptimizeResult result;
  result.path = path;

  const auto value_only = [&](const Path& candidate, double* ig_out,
                              double* gl_out) {
    const double ig = ig_path_value(map, frontiers, cam, candidate, cfg);
    const double gl = path_length_cost(candidate, weights.w).value();
    if (ig_out) *ig_out = ig;
    if (gl_out) *gl_out = gl;
    return -weights.alpha * ig + weights.beta * gl;
  };

  if (path.size() == 2 || options.max_iterations <= 0) {
    double ig = 0.0, gl = 0.0;
    result.objective = value_only(result.path, &ig, &gl);
    result.ig = ig;
    return result;
  }

  Eigen::VectorXd theta = interior_vector(result.path);
  double ig_cur = 0.0, gl_cur = 0.0;
  double j_cur = value_only(result.path, &ig_cur, &gl_cur);

  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    // Fresh gradient at the current primal point: gates and erasure
    // re-derived here.
    const ad::AdScalar ig_ad = ig_path(map, frontiers, cam, result.path, cfg);
    const ad::AdScalar gl_ad = path_length_cost(result.path, weights.w);
    Eigen::VectorXd grad(theta.size());
    for (Eigen::Index i = 0; i < grad.size(); ++i) {
      grad[i] = -weights.alpha * ig_ad.partial(i) +
                weights.beta * gl_ad.partial(i);
    }
    if (!grad.allFinite()) {
      result.aborted_nonfinite = true;
      break;
    }
    const double descent = -grad.squaredNorm();
    if (descent == 0.0) {
      break;
    }

    double step = 1.0;
    bool accepted = false;
    double j_trial = j_cur, ig_trial = 0.0, gl_trial = 0.0;
    Eigen::VectorXd theta_trial;
    for (int halving = 0; halving < options.max_halvings; ++halving) {
      theta_trial = theta - step * grad;
      j_trial = value_only(path_with_interior(result.path, theta_trial),
                           &ig_trial, &gl_trial);
      if (std::isfinite(j_trial) &&
          j_trial <= j_cur + options.armijo_c * step * descent) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      break;
    }

    const double step_norm = (theta_trial - theta).norm();
    theta = theta_trial;
    result.path = path_with_interior(result.path, theta);
    theta = interior_vector(result.path);  // yaw re-wrapped
    j_cur = j_trial;
    ig_cur = ig_trial;
    gl_cur = gl_trial;
    result.trace.push_back(
        {iteration, j_cur, ig_cur, gl_cur, step});
    if (step_norm < options.step_tolerance) {
      break;
    }
  }

  result.ig = ig_cur;
  result.objective = j_cur;
  return result;
}

}  // namespace explore
