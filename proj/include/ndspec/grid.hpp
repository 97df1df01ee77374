#pragma once

#include <functional>

#include "ndspec/types.hpp"

namespace ndspec {

// Coefficients f^(k) for |k| <= bandwidth of a C^n-valued periodic function.
class FourierCoefficients {
 public:
  FourierCoefficients() = default;
  FourierCoefficients(int bandwidth, Eigen::Index dim);

  int bandwidth() const noexcept { return bandwidth_; }
  Eigen::Index dim() const noexcept { return data_.cols(); }

  // Zero outside the stored band.
  Vector at(int k) const;
  void set(int k, const Vector& value);
  bool contains(int k) const noexcept { return k >= -bandwidth_ && k <= bandwidth_; }

  // Row k + bandwidth holds f^(k).
  const Matrix& data() const noexcept { return data_; }
  Matrix& data() noexcept { return data_; }

  // Same coefficients restricted or zero-padded to a new bandwidth.
  FourierCoefficients resized(int bandwidth) const;

  double max_abs() const;

 private:
  int bandwidth_ = 0;
  Matrix data_;
};

// f^(k) = (1/N) sum_j f(t_j) e^{-ik t_j}, t_j = 2 pi j / N. `samples` is N x n.
// Throws AliasingError if N < 2K+1.
FourierCoefficients analyze(const Matrix& samples, int bandwidth);

// Grid values sum_k c_k e^{ik t_j}. Throws AliasingError if bandwidth > N/2.
Matrix synthesize(const FourierCoefficients& coefficients, int grid_size);

inline double grid_node(int j, int grid_size) { return kTwoPi * j / grid_size; }

// Max over grid nodes of the Euclidean norm of each sample row.
double grid_max_norm(const Matrix& samples);

// Largest |Im| over all samples.
double max_imag(const Matrix& samples);

// A 2 pi-periodic function held both as N uniform samples and as its
// coefficients up to a bandwidth K with N >= 2K+1.
class PeriodicGridFunction {
 public:
  PeriodicGridFunction() = default;

  static PeriodicGridFunction from_samples(Matrix samples, int bandwidth);
  static PeriodicGridFunction from_coefficients(FourierCoefficients coefficients, int grid_size);
  static PeriodicGridFunction from_function(const std::function<Vector(double)>& f,
                                            Eigen::Index dim, int grid_size, int bandwidth);

  const Matrix& samples() const noexcept { return samples_; }
  const FourierCoefficients& coefficients() const noexcept { return coefficients_; }
  int grid_size() const noexcept { return static_cast<int>(samples_.rows()); }
  int bandwidth() const noexcept { return coefficients_.bandwidth(); }
  Eigen::Index dim() const noexcept { return samples_.cols(); }

 private:
  PeriodicGridFunction(Matrix samples, FourierCoefficients coefficients);

  Matrix samples_;
  FourierCoefficients coefficients_;
};

}  // namespace ndspec
