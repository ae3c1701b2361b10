#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "troute/params.hpp"

namespace troute::cli {

/// Model parameters as given on the command line or in a config file.
/// Unset fields fall back, in order, to the config file and then to the
/// defaults omega = 10, xi = 1, ga = gb = 0.3, omegaA = 10.
struct ParamOverrides {
  std::optional<double> omega, xi, ga, gb, omega_atom;
  std::optional<double> omega_a, omega_b, xi_a, xi_b;
};

/// Fully resolved configuration, echoed into every output.
struct RunConfig {
  std::string config_file;  // empty when none was given
  ModelParams params = ModelParams::uniform(10.0, 1.0, 0.3, 0.3, 10.0);
};

/// Parses a flat `key = value` TOML file. Recognised keys: omega, xi, ga,
/// gb, omegaA, omega_a, omega_b, xi_a, xi_b. Throws troute::Error
/// (InvalidParams / IoFailure) on anything else.
ParamOverrides read_config_file(const std::filesystem::path& path);

/// Flags take precedence over the file.
RunConfig resolve(const ParamOverrides& flags, const std::string& config_file);

}  // namespace troute::cli
