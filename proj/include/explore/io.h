#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "explore/explorer_sim.h"

namespace explore::io {

// All writers replace the target atomically (write to a temporary file in
// the same directory, then rename). Readers throw std::runtime_error with
// the file name and line number on malformed input.

/// Map snapshot: header "rho <value>" then one "i j k l" line per voxel.
void write_map_snapshot(const std::filesystem::path& file, const VoxelMap& map);

struct MapSnapshot {
  double rho = 0.0;
  std::vector<std::pair<VoxelKey, double>> entries;
};
MapSnapshot read_map_snapshot(const std::filesystem::path& file);

// Builds a map from a snapshot. When `bounds` is null the bounds are the
// hull of the stored voxels padded by one voxel.
VoxelMap map_from_snapshot(const MapSnapshot& snapshot,
                           const VoxelMapConfig& config,
                           const Aabb* bounds = nullptr);

/// Frontier snapshot: one "i j k" line per voxel, sorted.
void write_frontier_snapshot(const std::filesystem::path& file,
                             const FrontierSet& frontiers);

/// Path file: one "x y z yaw" line per pose, full precision (round-trips).
void write_path_file(const std::filesystem::path& file, const Path& path);
Path read_path_file(const std::filesystem::path& file);

/// Metrics CSV: header iter,ig_init,ig_opt,len_init,len_opt,coverage,wall_s.
void write_metrics_csv(const std::filesystem::path& file,
                       const RunMetrics& metrics);

/// Optimiser trace CSV: header iter,objective,ig,g_l,step.
void write_trace_csv(const std::filesystem::path& file,
                     const std::vector<IterationRecord>& trace);

/// Scene JSON: {"name": ..., "bounds": [min,max], "obstacles": [[min,max]...]}.
Scene read_scene_json(const std::filesystem::path& file);
void write_scene_json(const std::filesystem::path& file, const Scene& scene);

}  // namespace explore::io
