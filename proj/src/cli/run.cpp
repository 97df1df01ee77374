#include "ndspec/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "ndspec/besov.hpp"
#include "ndspec/cli/report.hpp"
#include "ndspec/compare.hpp"
#include "ndspec/errors.hpp"
#include "ndspec/spectral_solver.hpp"

#ifndef NDSPEC_VERSION
#define NDSPEC_VERSION "unknown"
#endif

namespace ndspec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Named output file -> contents, written only when an output directory is given.
using Artifacts = std::vector<std::pair<std::string, std::string>>;

constexpr int kMultiplierSamples = 16;
constexpr int kMultiplierBandwidth = 16;

CollocationOptions oracle_options(const Tolerances& tol) {
  CollocationOptions opts;
  opts.interpolate_off_grid = tol.interpolate_off_grid;
  opts.lag_tolerance = tol.lag_tolerance;
  opts.kernel_tolerance = tol.kernel_tail;
  return opts;
}

ordered_json solve_command(const RunConfig& config, Artifacts& files) {
  const ProblemSpec& spec = config.problem;
  const SpectralSolution sol = solve_periodic(spec, config.tolerances.singular_condition);
  const bool real = spec.is_real();

  ordered_json warnings = sol.warnings;
  if (sol.residual > config.tolerances.residual) {
    warnings.push_back("residual exceeds tolerance " + std::to_string(config.tolerances.residual));
  }
  ordered_json result = {{"truncation", sol.truncation},
                         {"grid_size", spec.grid_size},
                         {"residual", number(sol.residual)},
                         {"residual_within_tolerance", sol.residual <= config.tolerances.residual},
                         {"modal_defect", number(sol.modal_defect)},
                         {"tail_energy", number(sol.tail_energy)},
                         {"max_condition", number(sol.max_condition)},
                         {"max_norm", number(grid_max_norm(sol.u.samples()))},
                         {"warnings", std::move(warnings)}};
  files.emplace_back("solution.csv", grid_csv(sol.u.samples(), real));
  files.emplace_back("solution.json", dump_json({{"u", to_json(sol.u.coefficients())}}));
  return result;
}

ordered_json diagnose_command(const RunConfig& config) {
  const ProblemSpec& spec = config.problem;
  const double threshold = config.tolerances.singular_condition;
  const MBoundReport report = m_bounded_diagnostics(spec, config.window, threshold);
  const ResolventFamily family = resolvent_family(spec, config.window, threshold);

  double telescoping = 0.0;
  for (int k = -config.window; k < config.window; ++k) {
    telescoping = std::max(telescoping, telescoping_check(spec, k));
  }
  ordered_json result = to_json(report);
  result["modal_identity_defect"] = number(verify_modal_identity(family));
  result["split_identity_defect"] = number(verify_split_identity(family));
  result["telescoping_defect"] = number(telescoping);
  if (spec.is_real()) result["conjugate_symmetry_defect"] = number(conjugate_symmetry_defect(family));
  return result;
}

FourierCoefficients random_trig(std::mt19937_64& rng, int bandwidth, Eigen::Index dim) {
  std::normal_distribution<double> normal;
  FourierCoefficients c(bandwidth, dim);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx(normal(rng), normal(rng));
    c.set(k, v);
  }
  return c;
}

ordered_json besov_command(const RunConfig& config) {
  const ProblemSpec& spec = config.problem;
  const BesovParams& params = config.besov;
  params.validate();
  const int K = spec.truncation;
  const int N = spec.grid_size;

  const SpectralSolution sol = solve_periodic(spec, config.tolerances.singular_condition);
  const BesovNorm f_norm = besov_norm(sol.forcing, params, N);
  const BesovNorm u_norm = besov_norm(sol.u.coefficients(), params, N);

  ordered_json shift = nullptr;
  if (sol.forcing.max_abs() > 0.0) {
    try {
      shift = number(derivative_shift_ratio(sol.forcing, params, N));
    } catch (const ParameterError&) {
      // Constant forcing: the ratio is undefined.
    }
  }

  // Empirical multiplier constants of N_k and S_k = ik N_k on seeded random
  // trig polynomials.
  const double threshold = config.tolerances.singular_condition;
  const SymbolSequence n_symbol = [&](int k) {
    return invert_modal_matrix(assemble_modal_matrix(spec, k), k, threshold);
  };
  const SymbolSequence s_symbol = [&](int k) -> Matrix { return cplx(0.0, k) * n_symbol(k); };
  const int band = std::min(K, kMultiplierBandwidth);
  const int grid = std::max(N, 2 * band + 1);
  std::mt19937_64 rng(config.seed);
  double n_constant = 0.0;
  double s_constant = 0.0;
  double type_ratio_r2 = 0.0;
  double type_ratio_r15 = 0.0;
  for (int i = 0; i < kMultiplierSamples; ++i) {
    const FourierCoefficients f = random_trig(rng, band, spec.dim());
    n_constant = std::max(n_constant, apply_multiplier(n_symbol, f, params, grid).ratio);
    s_constant = std::max(s_constant, apply_multiplier(s_symbol, f, params, grid).ratio);
    type_ratio_r2 = std::max(type_ratio_r2, fourier_type_ratio(f, 2.0, grid));
    type_ratio_r15 = std::max(type_ratio_r15, fourier_type_ratio(f, 1.5, grid));
  }

  return {{"params", {{"s", params.s}, {"p", params.p}, {"q", params.q}}},
          {"levels", partition_levels(std::max(K, 1))},
          {"forcing_norm", number(f_norm.value)},
          {"forcing_quadrature_error", number(f_norm.quadrature_error)},
          {"solution_norm", number(u_norm.value)},
          {"solution_quadrature_error", number(u_norm.quadrature_error)},
          {"derivative_shift_ratio", shift},
          {"multiplier",
           {{"samples", kMultiplierSamples},
            {"bandwidth", band},
            {"seed", config.seed},
            {"N_constant", number(n_constant)},
            {"S_constant", number(s_constant)}}},
          {"fourier_type",
           {{"r2_max_ratio", number(type_ratio_r2)},
            {"r2_bound", number(1.0 / std::sqrt(kTwoPi))},
            {"r1.5_max_ratio", number(type_ratio_r15)}}}};
}

ordered_json verify_command(const RunConfig& config, Artifacts& files) {
  const ProblemSpec& spec = config.problem;
  const CollocationOptions opts = oracle_options(config.tolerances);
  const OracleComparison comparison = compare_with_oracle(spec, config.grid_list, opts);

  ordered_json rows = ordered_json::array();
  for (const auto& row : comparison.rows) rows.push_back({{"N", row.grid_size}, {"gap", number(row.gap)}});

  const PeriodicGridFunction oracle = collocation_solve(spec, spec.grid_size, opts);
  files.emplace_back("oracle.csv", grid_csv(oracle.samples(), spec.is_real()));
  return {{"truncation", spec.truncation},
          {"rows", std::move(rows)},
          {"order", comparison.order ? number(*comparison.order) : ordered_json(nullptr)}};
}

ordered_json sweep_command(const RunConfig& config) {
  const ConvergenceTable table =
      convergence_sweep(config.problem, config.truncation_list, config.tolerances.singular_condition);
  auto optional = [](const std::optional<double>& v) { return v ? number(*v) : ordered_json(nullptr); };
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"K", row.truncation},
                    {"residual", number(row.residual)},
                    {"change", optional(row.change)},
                    {"ratio", optional(row.ratio)},
                    {"rate", optional(row.rate)}});
  }
  return {{"rows", std::move(rows)}, {"slow_convergence", table.slow_convergence}};
}

std::string report_name(std::string_view command) {
  if (command == "diagnose") return "mbound.json";
  if (command == "solve") return "report.json";
  return std::string(command) + ".json";
}

ordered_json envelope(std::string_view command, ordered_json config) {
  return {{"tool", "ndspec"},
          {"version", std::string(tool_version())},
          {"command", std::string(command)},
          {"config", std::move(config)}};
}

void finish(RunOutcome& outcome, std::string_view command, const Artifacts& files,
            const std::optional<std::filesystem::path>& out_dir) {
  outcome.report["exit_code"] = outcome.exit_code;
  if (!out_dir) return;
  std::filesystem::create_directories(*out_dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(*out_dir / name, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + (*out_dir / name).string());
  };
  for (const auto& [name, text] : files) write(name, text);
  write(report_name(command), dump_json(outcome.report));
}

ordered_json error_json(const std::string& type, const std::string& message) {
  return {{"type", type}, {"message", message}};
}

}  // namespace

bool is_command(std::string_view command) {
  return std::find(std::begin(kCommands), std::end(kCommands), command) != std::end(kCommands);
}

std::string_view tool_version() { return NDSPEC_VERSION; }

RunOutcome run(std::string_view command, const RunConfig& config, const std::optional<std::filesystem::path>& out_dir) {
  RunOutcome outcome;
  outcome.report = envelope(command, config.resolved);
  Artifacts files;
  try {
    if (!is_command(command)) throw ParameterError("unknown command '" + std::string(command) + "'");
    ordered_json result;
    if (command == "solve") {
      result = solve_command(config, files);
    } else if (command == "diagnose") {
      result = diagnose_command(config);
    } else if (command == "besov") {
      result = besov_command(config);
    } else if (command == "verify") {
      result = verify_command(config, files);
    } else {
      result = sweep_command(config);
    }
    outcome.report["status"] = "ok";
    outcome.report["result"] = std::move(result);
  } catch (const SingularModeError& e) {
    files.clear();
    outcome.exit_code = kExitSingular;
    ordered_json err = error_json("singular_mode", e.what());
    if (e.has_mode()) err["mode"] = e.mode();
    err["condition"] = number(e.condition());
    outcome.report["status"] = "error";
    outcome.report["error"] = std::move(err);
  } catch (const ConfigError& e) {
    return invalid_config_outcome(command, e, out_dir);
  } catch (const Error& e) {
    // Dimension, aliasing, kernel, parameter and off-grid errors are all
    // validation failures of the supplied problem.
    files.clear();
    outcome.exit_code = kExitInvalid;
    outcome.report["status"] = "error";
    outcome.report["error"] = error_json("invalid", e.what());
  } catch (const std::exception& e) {
    files.clear();
    outcome.exit_code = kExitFailure;
    outcome.report["status"] = "error";
    outcome.report["error"] = error_json("failure", e.what());
  }
  finish(outcome, command, files, out_dir);
  return outcome;
}

RunOutcome invalid_config_outcome(std::string_view command, const ConfigError& error,
                                  const std::optional<std::filesystem::path>& out_dir) {
  RunOutcome outcome;
  outcome.exit_code = kExitInvalid;
  outcome.report = envelope(command, nullptr);
  ordered_json violations = ordered_json::array();
  for (const auto& v : error.violations()) violations.push_back({{"path", v.path}, {"message", v.message}});
  ordered_json err = error_json("config", "configuration failed validation");
  err["violations"] = std::move(violations);
  outcome.report["status"] = "error";
  outcome.report["error"] = std::move(err);
  finish(outcome, command, {}, out_dir);
  return outcome;
}

}  // namespace ndspec::cli
