#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "ndspec/delay.hpp"
#include "ndspec/grid.hpp"
#include "ndspec/kernel.hpp"

namespace ndspec {

// Finite sum of modes v_k e^{ikt}.
class TrigPolynomial {
 public:
  explicit TrigPolynomial(Eigen::Index dim = 1) : dim_(dim) {}

  TrigPolynomial& add_mode(int k, const Vector& value);
  TrigPolynomial& add_constant(const Vector& value) { return add_mode(0, value); }
  // value * cos(harmonic * t)
  TrigPolynomial& add_cos(int harmonic, const Vector& value);
  // value * sin(harmonic * t)
  TrigPolynomial& add_sin(int harmonic, const Vector& value);

  Eigen::Index dim() const noexcept { return dim_; }
  int bandwidth() const;
  const std::map<int, Vector>& modes() const noexcept { return modes_; }
  Vector operator()(double t) const;
  bool is_real() const;

 private:
  Eigen::Index dim_;
  std::map<int, Vector> modes_;
};

// Periodic forcing f. Either an exact trig polynomial, fixed grid samples, or a
// callable sampled on whatever grid is requested.
class Forcing {
 public:
  Forcing() : Forcing(TrigPolynomial(1)) {}
  Forcing(TrigPolynomial poly);  // NOLINT(google-explicit-constructor)

  static Forcing from_samples(Matrix samples);
  static Forcing from_function(std::function<Vector(double)> f, Eigen::Index dim, bool real);
  static Forcing zero(Eigen::Index dim) { return Forcing(TrigPolynomial(dim)); }

  Eigen::Index dim() const noexcept { return dim_; }
  bool is_real() const noexcept { return real_; }
  const TrigPolynomial* trig() const noexcept { return trig_ ? &*trig_ : nullptr; }
  const Matrix* fixed_samples() const noexcept { return samples_ ? &*samples_ : nullptr; }

  // Grid values at t_j = 2 pi j / N. Fixed samples require N to match.
  Matrix sample(int grid_size) const;

  // f^(k), |k| <= bandwidth. Exact for trig polynomials, otherwise the
  // discrete transform on `grid_size` nodes.
  FourierCoefficients coefficients(int bandwidth, int grid_size) const;

  // sum_{|k| > bandwidth} |f^(k)|^2 over what the grid resolves.
  double tail_energy(int bandwidth, int grid_size) const;

 private:
  Eigen::Index dim_ = 1;
  bool real_ = true;
  std::optional<TrigPolynomial> trig_;
  std::optional<Matrix> samples_;
  std::function<Vector(double)> function_;
};

// The data (A, L, G, a, f) of
//   d/dt [x(t) - L x_t] = A [x(t) - L x_t] + G x_t + int_{-inf}^t a(t-s) x(s) ds + f(t)
// together with the truncation K and grid N.
struct ProblemSpec {
  Matrix A;
  DelayFunctional L;
  DelayFunctional G;
  KernelSpec kernel;
  Forcing forcing;
  int truncation = 64;
  int grid_size = 256;

  Eigen::Index dim() const { return A.rows(); }

  // Throws DimensionError / AliasingError / ParameterError.
  void validate() const;

  // All data real, so solutions of real forcing are real.
  bool is_real() const;
};

// Convenience constructor with empty delays, zero kernel and zero forcing.
ProblemSpec make_problem(Matrix A, int truncation = 64, int grid_size = 256);

}  // namespace ndspec
