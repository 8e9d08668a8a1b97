#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdef/config.hpp"

namespace qdef {

/// Overrides for the [run] section of a config.
struct CommandOptions {
  std::optional<std::uint32_t> degree_bound;
  std::optional<unsigned> t_cap;
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitConfigError = 2 };

struct CommandResult {
  int exit_code = kExitPass;
  std::string text;
  nlohmann::ordered_json json;
};

/// The subcommands that take a config.
const std::vector<std::string>& config_commands();

/// Runs validate, deform, mu1, cocycle or certify on a loaded config.
/// Configuration problems found while running map to exit code 2.
CommandResult run_command(const std::string& command, const ExampleConfig& config, const CommandOptions& options);

/// Every config command on every builtin preset.
CommandResult run_selftest(const CommandOptions& options);

/// A result carrying only an error message, with exit code 2.
CommandResult config_error_result(const std::string& command, const std::string& message);

}  // namespace qdef
