#pragma once

#include <Eigen/Core>

#include "explore/diff_ig.h"

namespace explore {

// Objective J(Q) = -alpha * IG_path(Q) + beta * g_L(Q) with the diagonal of
// the positive-definite segment weight W.
struct ObjectiveWeights {
  double alpha = 5e-4;
  double beta = 0.05;
  Eigen::Vector4d w{1.0, 1.0, 1.0, 0.1};
};

// g_L: sum over consecutive pose pairs of the W-weighted squared difference,
// yaw wrapped to (-pi, pi]. Partials are with respect to the 4 * (n - 2)
// interior coordinates; for n == 2 the single segment cost is a constant.
ad::AdScalar path_length_cost(const Path& path, const Eigen::Vector4d& w);

struct OptimizeOptions {
  int max_iterations = 30;
  double step_tolerance = 1e-4;
  double armijo_c = 1e-4;
  int max_halvings = 40;
};

struct IterationRecord {
  int iteration;
  double objective;
  double ig;
  double length_cost;
  double step;
};

struct OptimizeResult {
  Path path;
  double ig = 0.0;
  double objective = 0.0;
  std::vector<IterationRecord> trace;
  bool aborted_nonfinite = false;
};

// Gradient descent with Armijo backtracking on the interior viewpoints; the
// endpoints never move. The objective never increases across accepted
// steps; gates and erasure are re-derived at each new primal point before
// the next gradient. Stops at the iteration budget, when the accepted step
// norm falls below step_tolerance, or when no backtracked step decreases J.
OptimizeResult optimize_path(const VoxelMap& map, const FrontierSet& frontiers,
                             const CameraModel& cam, const Path& path,
                             const ObjectiveWeights& weights,
                             const FuzzyConfig& cfg,
                             const OptimizeOptions& options = {});

}  // namespace explore
