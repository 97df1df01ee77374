#pragma once

// Time-domain reference solver. Deliberately built only on the problem data
// types; it never touches the modal matrices or the spectral solver.

#include <vector>

#include "ndspec/grid.hpp"
#include "ndspec/kernel.hpp"
#include "ndspec/problem.hpp"

namespace ndspec {

// a_bar(tau) = sum_{m=0}^{M} a(tau + 2 pi m) on the nodes tau_l = 2 pi l / N.
// For 2 pi-periodic u, int_{-inf}^t a(t-s) u(s) ds = int_0^{2 pi} a_bar(tau) u(t - tau) dtau.
struct PeriodizedKernel {
  int grid_size = 0;
  int folds = 0;             // M
  double tail_bound = 0.0;   // sum_{m > M} sup_tau |a(tau + 2 pi m)|
  std::vector<cplx> samples; // a_bar(tau_l); tau_0 is the right limit at 0
  // a^{(r)}(0+), r = 0..; the periodized kernel jumps by -a^{(r)}(0) across
  // tau = 2 pi in its r-th derivative.
  std::vector<cplx> wrap_jumps;

  // Trapezoidal value to use at tau_0 when integrating over a full period:
  // the mean of the two one-sided limits.
  cplx wrap_average() const;

  // int_0^{2 pi} a_bar(tau) e^{-ik tau} dtau by the endpoint-corrected
  // trapezoidal rule (Euler-Maclaurin with the known derivative jumps).
  cplx fourier_integral(int k) const;
};

// Chooses the smallest M with tail_bound <= tol * ||a||_1. Throws Error if M
// would exceed 10^6.
PeriodizedKernel periodize_kernel(const KernelSpec& kernel, int grid_size, double tol = 1e-12);

struct CollocationOptions {
  // Off-grid atom lags use 4-point Lagrange interpolation when enabled.
  bool interpolate_off_grid = false;
  double lag_tolerance = 1e-9;
  // Reciprocal condition estimates below this reject the system.
  double min_rcond = 1e-14;
  double kernel_tolerance = 1e-12;
};

// Solves the N*n dense system
//   (y_{j+1} - y_{j-1}) / (2 dt) = A y_j + (G x)_j + dt sum_l w_l a_bar(tau_l) x_{j-l} + f_j,
//   y_j = x_j - (L x)_j,
// on the periodic grid t_j = 2 pi j / N. Throws OffGridLagError or
// SingularModeError (without a mode).
PeriodicGridFunction collocation_solve(const ProblemSpec& spec, int grid_size,
                                       const CollocationOptions& options = {});

}  // namespace ndspec
