#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "symtop/dynamics.hpp"
#include "symtop/phase.hpp"

namespace symtop {

enum class RunSpace { Full, Reduced };

/// Largest rotation defect accepted from a config before repair.
inline constexpr double kConfigRotationTolerance = 1e-6;

/// Parsed and validated run description. The initial state is resolved to
/// both a full state and its projection; `reduced_initial` is what a reduced
/// run starts from.
struct RunConfig {
  RunSpace space = RunSpace::Reduced;
  BodyParams body;
  Potential potential;
  FullState full_initial;
  ReducedState reduced_initial;
  SimulationOptions options;
  std::uint64_t seed = 0;
  double reduced_dt = 0.0;  ///< equals options.dt after validation
  double tolerance = 1e-6;  ///< compare threshold
};

/// Thrown for every schema or value problem in a config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

Potential parse_potential(const nlohmann::json& j);

}  // namespace symtop
