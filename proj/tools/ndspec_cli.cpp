// Batch front end: ndspec <command> --config problem.json [--out dir] ...
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ndspec/cli/report.hpp"
#include "ndspec/cli/run.hpp"
#include "ndspec/errors.hpp"

namespace {

std::string commands_help() {
  std::string out;
  for (auto c : ndspec::cli::kCommands) {
    if (!out.empty()) out += ", ";
    out += c;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ndspec::cli;

  CLI::App app{"Spectral solver and diagnostics for periodic neutral delay integro-differential equations"};
  app.set_version_flag("--version", std::string(tool_version()));

  std::string command;
  std::string config_path;
  std::string out_dir;
  Overrides overrides;
  app.add_option("command", command, "One of: " + commands_help())->required();
  app.add_option("--config", config_path, "JSON problem configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Directory for reports and CSV output");
  app.add_option("--k", overrides.truncation, "Truncation K (overrides the config)");
  app.add_option("--grid", overrides.grid_size, "Grid size N (overrides the config)");
  app.add_option("--window", overrides.window, "Diagnostic window K_diag (overrides the config)");
  app.add_option("--seed", overrides.seed, "Seed for randomized checks (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (!is_command(command)) {
    std::cerr << "unknown command '" << command << "'; expected one of: " << commands_help() << "\n";
    return kExitInvalid;
  }

  std::ifstream in(config_path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();

  std::optional<std::filesystem::path> out;
  if (!out_dir.empty()) out = out_dir;

  RunOutcome outcome;
  try {
    outcome = run(command, parse_config(text.str(), overrides), out);
  } catch (const ndspec::ConfigError& e) {
    outcome = invalid_config_outcome(command, e, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  if (!out) std::cout << dump_json(outcome.report);
  if (outcome.exit_code != kExitOk && outcome.report.contains("error")) {
    std::cerr << "error: " << outcome.report["error"].value("message", std::string("unknown")) << "\n";
  }
  return outcome.exit_code;
}
