#pragma once

#include <functional>

#include "ndspec/grid.hpp"

namespace ndspec {

// Dyadic Littlewood-Paley partition in |k| built from the tent
//   h(x) = 2x - 1 on [1/2, 1],  2 - x on [1, 2],  0 elsewhere,
// with phi_j(k) = h(|k| / 2^j) for j >= 1 and phi_0 = 1 - sum_{j>=1} phi_j.
// All weights are dyadic rationals, so sum_j phi_j(k) == 1 exactly.
double partition_weight(int j, long long k);

// Number of the last block touching |k| <= bandwidth: ceil(log2 K) + 1.
int partition_levels(int bandwidth);

struct BesovParams {
  double s = 1.0;
  double p = 2.0;
  double q = 2.0;

  // Throws ParameterError unless s > 0 and p, q in [1, inf).
  void validate() const;
};

struct BesovNorm {
  double value = 0.0;
  // |norm on N nodes - norm on 2N nodes|; zero for p = 2 where the rule is exact.
  double quadrature_error = 0.0;
};

// ( sum_j 2^{s j q} || sum_k e_k phi_j(k) f^(k) ||_p^q )^{1/q},
// ||g||_p = ( int_0^{2 pi} ||g(t)||^p dt )^{1/p} by the trapezoidal rule on
// `grid_size` nodes.
BesovNorm besov_norm(const FourierCoefficients& f, const BesovParams& params, int grid_size);
BesovNorm besov_norm(const PeriodicGridFunction& f, const BesovParams& params);

// ||f'||_{B^s} / ||f - f^(0)||_{B^{s+1}}. Throws ParameterError for constant f.
double derivative_shift_ratio(const FourierCoefficients& f, const BesovParams& params, int grid_size);

using SymbolSequence = std::function<Matrix(int)>;

struct MultiplierResult {
  FourierCoefficients g;  // g^(k) = M_k f^(k)
  double ratio = 0.0;     // ||g||_B / ||f||_B
};

MultiplierResult apply_multiplier(const SymbolSequence& symbol, const FourierCoefficients& f,
                                  const BesovParams& params, int grid_size);

// || (f^(k)) ||_{l^{r'}} / ||f||_{L^r} with 1/r + 1/r' = 1. Throws
// ParameterError unless 1 < r <= 2.
double fourier_type_ratio(const FourierCoefficients& f, double r, int grid_size);

}  // namespace ndspec
