#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "ndspec/errors.hpp"
#include "ndspec/oracle.hpp"

namespace ndspec {

namespace {

// (shift s, W): contributes W x_{j - s} to row j; shifts are reduced mod N.
class Stencil {
 public:
  Stencil(int grid_size, Eigen::Index dim) : grid_size_(grid_size), dim_(dim) {}

  void add(long long shift, const Matrix& weight) {
    const int s = static_cast<int>(((shift % grid_size_) + grid_size_) % grid_size_);
    auto [it, inserted] = terms_.try_emplace(s, Matrix::Zero(dim_, dim_));
    it->second += weight;
  }

  void add(const Stencil& other, cplx scale, long long offset) {
    for (const auto& [s, w] : other.terms_) add(s + offset, scale * w);
  }

  void add_left(const Matrix& left, const Stencil& other, cplx scale) {
    for (const auto& [s, w] : other.terms_) add(s, scale * (left * w));
  }

  const std::map<int, Matrix>& terms() const noexcept { return terms_; }

 private:
  int grid_size_;
  Eigen::Index dim_;
  std::map<int, Matrix> terms_;
};

bool near_integer(double value, double tol, long long& rounded) {
  rounded = std::llround(value);
  return std::abs(value - static_cast<double>(rounded)) <= tol;
}

Stencil delay_stencil(const DelayFunctional& functional, int grid_size, const CollocationOptions& options,
                      const char* name) {
  const double dt = kTwoPi / grid_size;
  Stencil stencil(grid_size, functional.dim());
  for (const auto& atom : functional.atoms()) {
    const double position = atom.lag / dt;
    long long shift = 0;
    if (near_integer(position, options.lag_tolerance, shift)) {
      stencil.add(shift, atom.coefficient);
      continue;
    }
    if (!options.interpolate_off_grid) {
      throw OffGridLagError(std::string(name) + ": lag " + std::to_string(atom.lag) +
                            " is not a multiple of the grid step for N = " + std::to_string(grid_size));
    }
    // x at fractional index j - position from the four surrounding nodes
    // (local coordinates -1, 0, 1, 2 around floor(j - position)).
    const double whole = std::floor(position);
    const double u = 1.0 - (position - whole);
    const double weights[4] = {-u * (u - 1.0) * (u - 2.0) / 6.0, (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0,
                               -(u + 1.0) * u * (u - 2.0) / 2.0, (u + 1.0) * u * (u - 1.0) / 6.0};
    const auto base = static_cast<long long>(whole) + 1;
    for (int d = -1; d <= 2; ++d) stencil.add(base - d, weights[d + 1] * atom.coefficient);
  }
  for (const auto& part : functional.distributed()) {
    long long nodes = 0;
    if (!near_integer(part.span / dt, options.lag_tolerance, nodes)) {
      throw OffGridLagError(std::string(name) + ": distributed span " + std::to_string(part.span) +
                            " is not a multiple of the grid step for N = " + std::to_string(grid_size));
    }
    for (long long l = 0; l <= nodes; ++l) {
      const double end_weight = (l == 0 || l == nodes) ? 0.5 : 1.0;
      const cplx weight = dt * end_weight * part.profile.weight(-static_cast<double>(l) * dt);
      stencil.add(l, weight * part.coefficient);
    }
  }
  return stencil;
}

}  // namespace

PeriodicGridFunction collocation_solve(const ProblemSpec& spec, int grid_size,
                                       const CollocationOptions& options) {
  const Eigen::Index n = spec.dim();
  if (grid_size < 3) throw ParameterError("collocation: grid needs at least 3 nodes");
  if (spec.L.dim() != n || spec.G.dim() != n || spec.forcing.dim() != n) {
    throw DimensionError("collocation: problem dimensions disagree");
  }
  const double dt = kTwoPi / grid_size;
  const Matrix identity = Matrix::Identity(n, n);

  // y = (I - L) x
  Stencil neutral(grid_size, n);
  neutral.add(0, identity);
  neutral.add(delay_stencil(spec.L, grid_size, options, "L"), -1.0, 0);

  // Row operator: centred difference of y, minus A y, G x and the convolution.
  Stencil row(grid_size, n);
  row.add(neutral, 1.0 / (2.0 * dt), -1);
  row.add(neutral, -1.0 / (2.0 * dt), +1);
  row.add_left(-spec.A, neutral, 1.0);
  row.add(delay_stencil(spec.G, grid_size, options, "G"), -1.0, 0);
  if (!spec.kernel.empty()) {
    const PeriodizedKernel folded = periodize_kernel(spec.kernel, grid_size, options.kernel_tolerance);
    for (int l = 0; l < grid_size; ++l) {
      const cplx value = l == 0 ? folded.wrap_average() : folded.samples[l];
      row.add(l, -dt * value * identity);
    }
  }

  const Eigen::Index size = static_cast<Eigen::Index>(grid_size) * n;
  Matrix system = Matrix::Zero(size, size);
  for (int j = 0; j < grid_size; ++j) {
    for (const auto& [shift, weight] : row.terms()) {
      const int col = ((j - shift) % grid_size + grid_size) % grid_size;
      system.block(j * n, col * n, n, n) += weight;
    }
  }

  const Matrix forcing = spec.forcing.sample(grid_size);
  Vector rhs(size);
  for (int j = 0; j < grid_size; ++j) rhs.segment(j * n, n) = forcing.row(j).transpose();

  Eigen::PartialPivLU<Matrix> lu(system);
  const double rcond = lu.rcond();
  if (!(rcond >= options.min_rcond)) {
    const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    throw SingularModeError(SingularModeError::kNoMode, condition,
                            "collocation system is numerically singular (rcond " + std::to_string(rcond) + ")");
  }
  const Vector solution = lu.solve(rhs);

  Matrix samples(grid_size, n);
  for (int j = 0; j < grid_size; ++j) samples.row(j) = solution.segment(j * n, n).transpose();
  const int bandwidth = std::min(spec.truncation, (grid_size - 1) / 2);
  return PeriodicGridFunction::from_samples(std::move(samples), bandwidth);
}

}  // namespace ndspec
