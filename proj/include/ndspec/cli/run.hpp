#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "ndspec/cli/config.hpp"
#include "ndspec/errors.hpp"

namespace ndspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSingular = 2;
inline constexpr int kExitInvalid = 3;

inline constexpr std::string_view kCommands[] = {"solve", "diagnose", "besov", "verify", "sweep"};

bool is_command(std::string_view command);

std::string_view tool_version();

struct RunOutcome {
  int exit_code = kExitOk;
  nlohmann::ordered_json report;
};

// Runs one command. When `out_dir` is set the report and any CSV/JSON outputs
// are written there (the directory is created if needed).
RunOutcome run(std::string_view command, const RunConfig& config,
               const std::optional<std::filesystem::path>& out_dir = std::nullopt);

// Report for a config that failed validation (exit code 3).
RunOutcome invalid_config_outcome(std::string_view command, const ConfigError& error,
                                  const std::optional<std::filesystem::path>& out_dir = std::nullopt);

}  // namespace ndspec::cli
