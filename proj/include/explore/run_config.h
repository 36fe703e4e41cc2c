#pragma once

#include <filesystem>
#include <string>

#include "explore/explorer_sim.h"

namespace explore {

// Everything one exploration run needs: the scene reference (a bundled name
// or a scene JSON path), the module parameters, seed and output directory.
struct RunConfig {
  std::string scene = "tunnel";
  uint64_t seed = 1;
  std::string out_dir = "out";
  bool trace = false;
  ExplorationConfig exploration;
};

// Parses and validates a JSON config. Every field is optional and defaults
// to the values above / the module defaults; a violated precondition names
// the offending field. When `file` is empty the defaults are returned.
RunConfig load_run_config(const std::filesystem::path& file);

/// Resolves a bundled scene name or falls back to reading a scene JSON file.
Scene resolve_scene(const std::string& name_or_path);

/// The full default config as a JSON string (the README block).
std::string default_config_json();

}  // namespace explore
