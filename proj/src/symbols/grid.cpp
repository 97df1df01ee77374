#include "ndspec/grid.hpp"

#include <string>
#include <vector>

#include "ndspec/errors.hpp"
#include "ndspec/simd/kernels.hpp"

namespace ndspec {

namespace {

// e^{-2 pi i m / N}, m = 0..N-1.
std::vector<cplx> twiddle_table(int grid_size) {
  std::vector<cplx> table(grid_size);
  for (int m = 0; m < grid_size; ++m) table[m] = std::polar(1.0, -kTwoPi * m / grid_size);
  return table;
}

// row[j] = e^{-i k t_j}
void fill_row(const std::vector<cplx>& table, int k, std::vector<cplx>& row) {
  const int n = static_cast<int>(table.size());
  const int step = ((k % n) + n) % n;
  int index = 0;
  for (int j = 0; j < n; ++j) {
    row[j] = table[index];
    index += step;
    if (index >= n) index -= n;
  }
}

std::span<const cplx> column(const Matrix& m, Eigen::Index c) {
  return {m.data() + c * m.rows(), static_cast<std::size_t>(m.rows())};
}

std::span<cplx> column(Matrix& m, Eigen::Index c) {
  return {m.data() + c * m.rows(), static_cast<std::size_t>(m.rows())};
}

}  // namespace

FourierCoefficients::FourierCoefficients(int bandwidth, Eigen::Index dim)
    : bandwidth_(bandwidth), data_(Matrix::Zero(2 * bandwidth + 1, dim)) {
  if (bandwidth < 0) throw ParameterError("bandwidth must be non-negative");
}

Vector FourierCoefficients::at(int k) const {
  if (!contains(k)) return Vector::Zero(dim());
  return data_.row(k + bandwidth_).transpose();
}

void FourierCoefficients::set(int k, const Vector& value) {
  if (!contains(k)) throw ParameterError("mode " + std::to_string(k) + " outside stored band");
  if (value.size() != dim()) throw DimensionError("coefficient has wrong dimension");
  data_.row(k + bandwidth_) = value.transpose();
}

FourierCoefficients FourierCoefficients::resized(int bandwidth) const {
  FourierCoefficients out(bandwidth, dim());
  const int shared = std::min(bandwidth, bandwidth_);
  out.data_.middleRows(bandwidth - shared, 2 * shared + 1) =
      data_.middleRows(bandwidth_ - shared, 2 * shared + 1);
  return out;
}

double FourierCoefficients::max_abs() const {
  return data_.size() == 0 ? 0.0 : data_.cwiseAbs().maxCoeff();
}

FourierCoefficients analyze(const Matrix& samples, int bandwidth) {
  const int n = static_cast<int>(samples.rows());
  if (n < 2 * bandwidth + 1) {
    throw AliasingError("analyze: grid of " + std::to_string(n) + " nodes cannot resolve bandwidth " +
                        std::to_string(bandwidth) + " (need N >= 2K+1)");
  }
  FourierCoefficients out(bandwidth, samples.cols());
  const auto table = twiddle_table(n);
  std::vector<cplx> row(n);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    fill_row(table, k, row);
    for (Eigen::Index c = 0; c < samples.cols(); ++c) {
      out.data()(k + bandwidth, c) = simd::dot(column(samples, c), row) / static_cast<double>(n);
    }
  }
  return out;
}

Matrix synthesize(const FourierCoefficients& coefficients, int grid_size) {
  const int bandwidth = coefficients.bandwidth();
  if (grid_size <= 0 || 2 * bandwidth > grid_size) {
    throw AliasingError("synthesize: bandwidth " + std::to_string(bandwidth) + " exceeds N/2 for N = " +
                        std::to_string(grid_size));
  }
  Matrix out = Matrix::Zero(grid_size, coefficients.dim());
  const auto table = twiddle_table(grid_size);
  std::vector<cplx> row(grid_size);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    fill_row(table, -k, row);
    for (Eigen::Index c = 0; c < coefficients.dim(); ++c) {
      const cplx value = coefficients.data()(k + bandwidth, c);
      if (value == 0.0) continue;
      simd::axpy(value, row, column(out, c));
    }
  }
  return out;
}

double grid_max_norm(const Matrix& samples) {
  if (samples.size() == 0) return 0.0;
  std::vector<double> norms(samples.rows(), 0.0);
  for (Eigen::Index c = 0; c < samples.cols(); ++c) simd::accumulate_abs2(column(samples, c), norms);
  double best = 0.0;
  for (double v : norms) best = std::max(best, v);
  return std::sqrt(best);
}

double max_imag(const Matrix& samples) {
  return samples.size() == 0 ? 0.0 : samples.imag().cwiseAbs().maxCoeff();
}

PeriodicGridFunction::PeriodicGridFunction(Matrix samples, FourierCoefficients coefficients)
    : samples_(std::move(samples)), coefficients_(std::move(coefficients)) {}

PeriodicGridFunction PeriodicGridFunction::from_samples(Matrix samples, int bandwidth) {
  auto coefficients = analyze(samples, bandwidth);
  return {std::move(samples), std::move(coefficients)};
}

PeriodicGridFunction PeriodicGridFunction::from_coefficients(FourierCoefficients coefficients,
                                                             int grid_size) {
  if (grid_size < 2 * coefficients.bandwidth() + 1) {
    throw AliasingError("periodic grid function: N = " + std::to_string(grid_size) +
                        " < 2K+1 for K = " + std::to_string(coefficients.bandwidth()));
  }
  Matrix samples = synthesize(coefficients, grid_size);
  return {std::move(samples), std::move(coefficients)};
}

PeriodicGridFunction PeriodicGridFunction::from_function(const std::function<Vector(double)>& f,
                                                         Eigen::Index dim, int grid_size,
                                                         int bandwidth) {
  Matrix samples(grid_size, dim);
  for (int j = 0; j < grid_size; ++j) {
    const Vector v = f(grid_node(j, grid_size));
    if (v.size() != dim) throw DimensionError("periodic grid function: sample has wrong dimension");
    samples.row(j) = v.transpose();
  }
  return from_samples(std::move(samples), bandwidth);
}

}  // namespace ndspec
