#pragma once

// Problem description files (JSON). Parsing is strict: unknown keys, wrong
// types and vectors whose length differs from b2 are ConfigErrors, and the
// surface is validated on construction.

#include <optional>
#include <string>

#include "json.hpp"
#include "wallcross/lattice_walls.hpp"
#include "wallcross/symmetric_ring.hpp"

namespace wallcross {

struct ProblemConfig {
  SurfaceData surface;
  ChernData chern;
  IntVector h_minus;
  IntVector h_plus;
  std::optional<IntVector> C;
  OracleCaps caps;
};

/// Parses an already-decoded document. Throws Error(ConfigError) on schema
/// problems; surface validation errors keep their own kind.
ProblemConfig parse_config(const nlohmann::json& doc);

/// Reads and parses a file. Throws Error(ConfigError) on I/O or syntax errors.
ProblemConfig load_config(const std::string& path);

nlohmann::json config_to_json(const ProblemConfig& config);

}  // namespace wallcross
