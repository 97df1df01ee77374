#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ndspec/grid.hpp"
#include "ndspec/problem.hpp"
#include "ndspec/resolvent.hpp"

namespace ndspec {

// u^(k) = N_k f^(k) for |k| <= K, plus the component series that appear when
// the equation is read off mode by mode:
//   v^(k) = ik D_k u^(k)   ((D u_t)')
//   q^(k) = A D_k u^(k)
//   w^(k) = G_k u^(k)
//   x^(k) = a~(ik) u^(k)
// with v - q - w - x = f mode by mode.
struct SpectralSolution {
  PeriodicGridFunction u;
  FourierCoefficients forcing;
  FourierCoefficients v;
  FourierCoefficients q;
  FourierCoefficients w;
  FourierCoefficients x;
  int truncation = 0;
  double residual = 0.0;         // max grid norm of the equation residual
  double modal_defect = 0.0;     // max_k |v - q - w - x - f|
  double tail_energy = 0.0;      // energy of f beyond K dropped by truncation
  double max_condition = 0.0;
  std::vector<std::string> warnings;
};

// Throws SingularModeError naming the first singular mode.
SpectralSolution solve_periodic(const ProblemSpec& spec, double singular_condition = kSingularCondition);

// Residual r(t) of the equation for a band-limited u on the problem grid,
// evaluated spectrally as r^(k) = M(k) u^(k) - f^(k) over every mode the grid
// resolves; returns max_j ||r(t_j)||.
double residual(const ProblemSpec& spec, const PeriodicGridFunction& u);

struct ConvergenceRow {
  int truncation = 0;
  double residual = 0.0;
  std::optional<double> change;  // max grid norm of u_K - u_{K_prev}
  std::optional<double> ratio;   // change / previous change
  std::optional<double> rate;    // algebraic order log(prev/change) / log(K/K_prev)
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool slow_convergence = false;
};

// Changes below this (relative to ||u||) count as converged to round-off.
inline constexpr double kConvergedChange = 1e-13;
// Algebraic rates below this at the last refinement are flagged as slow.
inline constexpr double kSlowRate = 3.0;

ConvergenceTable convergence_sweep(const ProblemSpec& spec, std::span<const int> truncations,
                                   double singular_condition = kSingularCondition);

}  // namespace ndspec
