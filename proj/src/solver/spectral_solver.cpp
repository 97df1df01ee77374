#include "ndspec/spectral_solver.hpp"

#include <cmath>
#include <string>

#include "ndspec/errors.hpp"

namespace ndspec {

namespace {

int resolved_band(const ProblemSpec& spec) { return (spec.grid_size - 1) / 2; }

// r^(k) = M(k) u^(k) - f^(k) for |k| <= band.
FourierCoefficients residual_coefficients(const ProblemSpec& spec, const FourierCoefficients& u_hat,
                                          int band) {
  const FourierCoefficients f_hat = spec.forcing.coefficients(band, spec.grid_size);
  FourierCoefficients r(band, spec.dim());
  for (int k = -band; k <= band; ++k) {
    const Vector u = u_hat.at(k);
    Vector value = -f_hat.at(k);
    if (u.cwiseAbs().maxCoeff() > 0.0) value += assemble_modal_matrix(spec, k) * u;
    r.set(k, value);
  }
  return r;
}

}  // namespace

SpectralSolution solve_periodic(const ProblemSpec& spec, double singular_condition) {
  spec.validate();
  const int K = spec.truncation;
  const Eigen::Index n = spec.dim();
  const bool real = spec.is_real();

  SpectralSolution sol;
  sol.truncation = K;
  sol.forcing = spec.forcing.coefficients(K, spec.grid_size);
  sol.tail_energy = spec.forcing.tail_energy(K, spec.grid_size);
  if (sol.tail_energy > 0.0) {
    sol.warnings.push_back("forcing has energy " + std::to_string(sol.tail_energy) +
                           " beyond the truncation K = " + std::to_string(K));
  }

  FourierCoefficients u_hat(K, n);
  sol.v = sol.q = sol.w = sol.x = FourierCoefficients(K, n);

  // Real data: solve k >= 0 and mirror, so the synthesized u is real.
  const int first = real ? 0 : -K;
  for (int k = first; k <= K; ++k) {
    const ModalSymbols symbols = modal_symbols(spec, k);
    const Matrix M = assemble_modal_matrix(spec.A, symbols);
    const Matrix N = invert_modal_matrix(M, k, singular_condition);
    sol.max_condition = std::max(sol.max_condition, condition_number(M));

    const Vector u = N * sol.forcing.at(k);
    const cplx ik{0.0, static_cast<double>(k)};
    const Vector v = ik * (symbols.D * u);
    const Vector q = spec.A * (symbols.D * u);
    const Vector w = symbols.G * u;
    const Vector x = symbols.kernel * u;
    u_hat.set(k, u);
    sol.v.set(k, v);
    sol.q.set(k, q);
    sol.w.set(k, w);
    sol.x.set(k, x);
    if (real && k > 0) {
      u_hat.set(-k, u.conjugate());
      sol.v.set(-k, v.conjugate());
      sol.q.set(-k, q.conjugate());
      sol.w.set(-k, w.conjugate());
      sol.x.set(-k, x.conjugate());
    }
  }

  for (int k = -K; k <= K; ++k) {
    const Vector defect = sol.v.at(k) - sol.q.at(k) - sol.w.at(k) - sol.x.at(k) - sol.forcing.at(k);
    sol.modal_defect = std::max(sol.modal_defect, defect.cwiseAbs().maxCoeff());
  }

  sol.u = PeriodicGridFunction::from_coefficients(std::move(u_hat), spec.grid_size);
  sol.residual = residual(spec, sol.u);
  return sol;
}

double residual(const ProblemSpec& spec, const PeriodicGridFunction& u) {
  if (u.grid_size() != spec.grid_size) throw DimensionError("residual: u is on a different grid");
  if (u.dim() != spec.dim()) throw DimensionError("residual: u has the wrong dimension");
  const int band = std::max(resolved_band(spec), u.bandwidth());
  const FourierCoefficients r = residual_coefficients(spec, u.coefficients(), band);
  // Modes with |k| > N/2 would alias; the band never exceeds (N-1)/2 for valid u.
  return grid_max_norm(synthesize(r.resized(std::min(band, spec.grid_size / 2)), spec.grid_size));
}

ConvergenceTable convergence_sweep(const ProblemSpec& spec, std::span<const int> truncations,
                                   double singular_condition) {
  ConvergenceTable table;
  Matrix previous;
  int previous_k = 0;
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    const int K = truncations[i];
    if (i > 0 && K <= previous_k) throw ParameterError("convergence sweep: truncations must ascend");
    ProblemSpec local = spec;
    local.truncation = K;
    const SpectralSolution sol = solve_periodic(local, singular_condition);

    ConvergenceRow row;
    row.truncation = K;
    row.residual = sol.residual;
    if (i > 0) {
      const double change = grid_max_norm(sol.u.samples() - previous);
      const double scale = std::max(1.0, grid_max_norm(sol.u.samples()));
      row.change = change < kConvergedChange * scale ? 0.0 : change;
      const auto& prev_row = table.rows.back();
      if (prev_row.change && *prev_row.change > 0.0) {
        row.ratio = *row.change / *prev_row.change;
        if (*row.change > 0.0) {
          row.rate = std::log(*prev_row.change / *row.change) /
                     std::log(static_cast<double>(K) / prev_row.truncation);
        }
      }
    }
    table.rows.push_back(row);
    previous = sol.u.samples();
    previous_k = K;
  }
  // Geometric convergence shows up as a steadily increasing algebraic rate; a
  // rate that stays low at the finest refinement means algebraic decay.
  for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
    if (it->rate) {
      table.slow_convergence = *it->rate < kSlowRate;
      break;
    }
  }
  return table;
}

}  // namespace ndspec
