#include "ndspec/compare.hpp"

#include <cmath>

#include "ndspec/spectral_solver.hpp"

namespace ndspec {

namespace {

// Point values of the band-limited u on an N-node grid. Modes beyond N/2 are
// summed directly, so coarse grids see the exact u(t_j) rather than a
// truncated copy.
Matrix evaluate_on_grid(const FourierCoefficients& c, int grid_size) {
  if (2 * c.bandwidth() < grid_size) return synthesize(c, grid_size);
  Matrix out = Matrix::Zero(grid_size, c.dim());
  for (int k = -c.bandwidth(); k <= c.bandwidth(); ++k) {
    const Vector v = c.at(k);
    for (int j = 0; j < grid_size; ++j) {
      const long long turns = (static_cast<long long>(k) * j) % grid_size;
      out.row(j) += (std::polar(1.0, kTwoPi * static_cast<double>(turns) / grid_size) * v).transpose();
    }
  }
  return out;
}

}  // namespace

OracleComparison compare_with_oracle(const ProblemSpec& spec, std::span<const int> grid_sizes,
                                     const CollocationOptions& options) {
  const SpectralSolution spectral = solve_periodic(spec);
  OracleComparison result;
  for (const int n : grid_sizes) {
    const PeriodicGridFunction oracle = collocation_solve(spec, n, options);
    const Matrix reference = evaluate_on_grid(spectral.u.coefficients(), n);
    result.rows.push_back({n, grid_max_norm(oracle.samples() - reference)});
  }

  if (result.rows.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    bool usable = true;
    for (const auto& row : result.rows) {
      if (!(row.gap > 0.0)) {
        usable = false;
        break;
      }
      const double x = std::log(static_cast<double>(row.grid_size));
      const double y = std::log(row.gap);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(result.rows.size());
    const double denom = m * sxx - sx * sx;
    if (usable && denom != 0.0) result.order = -(m * sxy - sx * sy) / denom;
  }
  return result;
}

}  // namespace ndspec
