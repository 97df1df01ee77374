#include "ndspec/besov.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ndspec/errors.hpp"
#include "ndspec/simd/kernels.hpp"

namespace ndspec {

namespace {

double tent(double x) {
  if (x >= 0.5 && x <= 1.0) return 2.0 * x - 1.0;
  if (x > 1.0 && x <= 2.0) return 2.0 - x;
  return 0.0;
}

// ( int_0^{2 pi} ||g(t)||^p dt )^{1/p}, trapezoidal on the given samples.
double lp_norm(const Matrix& samples, double p) {
  const auto n = static_cast<std::size_t>(samples.rows());
  std::vector<double> abs2(n, 0.0);
  for (Eigen::Index c = 0; c < samples.cols(); ++c) {
    simd::accumulate_abs2({samples.data() + c * samples.rows(), n}, abs2);
  }
  double sum = 0.0;
  for (double v : abs2) sum += std::pow(v, 0.5 * p);
  return std::pow(kTwoPi / static_cast<double>(n) * sum, 1.0 / p);
}

double besov_value(const FourierCoefficients& f, const BesovParams& params, int grid_size) {
  const int K = f.bandwidth();
  double total = 0.0;
  for (int j = 0; j <= partition_levels(K); ++j) {
    FourierCoefficients block(K, f.dim());
    bool active = false;
    for (int k = -K; k <= K; ++k) {
      const double weight = partition_weight(j, k);
      if (weight == 0.0) continue;
      block.data().row(k + K) = weight * f.data().row(k + K);
      active = true;
    }
    if (!active) continue;
    const double block_norm = lp_norm(synthesize(block, grid_size), params.p);
    total += std::pow(2.0, params.s * j * params.q) * std::pow(block_norm, params.q);
  }
  return std::pow(total, 1.0 / params.q);
}

void check_grid(const FourierCoefficients& f, int grid_size) {
  if (grid_size < 2 * f.bandwidth() + 1) {
    throw AliasingError("besov: grid N = " + std::to_string(grid_size) + " < 2K+1");
  }
}

}  // namespace

double partition_weight(int j, long long k) {
  if (j < 0) throw ParameterError("partition index must be non-negative");
  const double magnitude = std::abs(static_cast<double>(k));
  if (j >= 1) return tent(std::ldexp(magnitude, -j));
  // phi_0 = 1 - phi_1 - ...; only phi_1 can overlap phi_0's support [-2, 2].
  if (magnitude <= 1.0) return 1.0;
  if (magnitude < 2.0) return 2.0 - magnitude;
  return 0.0;
}

int partition_levels(int bandwidth) {
  if (bandwidth <= 1) return 1;
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(bandwidth)))) + 1;
}

void BesovParams::validate() const {
  if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("besov: s must be > 0");
  if (!(p >= 1.0) || !std::isfinite(p)) throw ParameterError("besov: p must lie in [1, inf)");
  if (!(q >= 1.0) || !std::isfinite(q)) throw ParameterError("besov: q must lie in [1, inf)");
}

BesovNorm besov_norm(const FourierCoefficients& f, const BesovParams& params, int grid_size) {
  params.validate();
  check_grid(f, grid_size);
  BesovNorm result;
  result.value = besov_value(f, params, grid_size);
  if (params.p != 2.0) {
    result.quadrature_error = std::abs(besov_value(f, params, 2 * grid_size) - result.value);
  }
  return result;
}

BesovNorm besov_norm(const PeriodicGridFunction& f, const BesovParams& params) {
  return besov_norm(f.coefficients(), params, f.grid_size());
}

double derivative_shift_ratio(const FourierCoefficients& f, const BesovParams& params, int grid_size) {
  FourierCoefficients derivative(f.bandwidth(), f.dim());
  FourierCoefficients centred = f;
  centred.set(0, Vector::Zero(f.dim()));
  for (int k = -f.bandwidth(); k <= f.bandwidth(); ++k) {
    derivative.set(k, cplx(0.0, k) * f.at(k));
  }
  if (centred.max_abs() == 0.0) throw ParameterError("derivative shift: f is constant");
  BesovParams shifted = params;
  shifted.s += 1.0;
  return besov_norm(derivative, params, grid_size).value / besov_norm(centred, shifted, grid_size).value;
}

MultiplierResult apply_multiplier(const SymbolSequence& symbol, const FourierCoefficients& f,
                                  const BesovParams& params, int grid_size) {
  MultiplierResult result{FourierCoefficients(f.bandwidth(), f.dim()), 0.0};
  for (int k = -f.bandwidth(); k <= f.bandwidth(); ++k) {
    const Matrix m = symbol(k);
    if (m.cols() != f.dim()) throw DimensionError("multiplier: symbol does not match f");
    if (m.rows() != f.dim()) throw DimensionError("multiplier: only square symbols are supported");
    result.g.set(k, m * f.at(k));
  }
  const double denominator = besov_norm(f, params, grid_size).value;
  result.ratio = denominator == 0.0 ? 0.0 : besov_norm(result.g, params, grid_size).value / denominator;
  return result;
}

double fourier_type_ratio(const FourierCoefficients& f, double r, int grid_size) {
  if (!(r > 1.0 && r <= 2.0)) throw ParameterError("fourier type: r must lie in (1, 2]");
  check_grid(f, grid_size);
  const double r_dual = r / (r - 1.0);
  double coeff_sum = 0.0;
  for (int k = -f.bandwidth(); k <= f.bandwidth(); ++k) {
    coeff_sum += std::pow(f.at(k).norm(), r_dual);
  }
  const double function_norm = lp_norm(synthesize(f, grid_size), r);
  if (function_norm == 0.0) throw ParameterError("fourier type: f is zero");
  return std::pow(coeff_sum, 1.0 / r_dual) / function_norm;
}

}  // namespace ndspec
