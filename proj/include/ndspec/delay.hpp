#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ndspec/types.hpp"

namespace ndspec {

// Point-evaluation term B * x(t - lag).
struct DelayAtom {
  Matrix coefficient;
  double lag = 0.0;
};

// Scalar weight profile g(theta) on [-span, 0].
struct DelayProfile {
  std::function<cplx(double)> weight;
  bool real = true;
  std::string description = "custom";

  static DelayProfile constant(double value = 1.0);
  // g(theta) = exp(rate * theta)
  static DelayProfile exponential(double rate);
  // Uniform samples on [-span, 0] (first sample at -span), linearly interpolated.
  static DelayProfile samples(std::vector<double> values, double span);
};

// Distributed term coefficient * int_{-span}^0 g(theta) x(t + theta) dtheta.
struct DistributedDelay {
  Matrix coefficient;
  double span = 0.0;
  DelayProfile profile;
  // Minimum Gauss-Legendre panels per 2*pi of span; refined further for high |k|.
  int panels_per_period = 64;
};

// Bounded delay functional on histories x_t over [-r, 0], r = 2*pi*periods.
class DelayFunctional {
 public:
  explicit DelayFunctional(Eigen::Index dim = 1, int periods = 1);

  // Throws DimensionError on a mismatched coefficient and ParameterError when
  // the lag (or span) falls outside [0, r].
  DelayFunctional& add_atom(Matrix coefficient, double lag);
  DelayFunctional& add_distributed(DistributedDelay part);

  Eigen::Index dim() const noexcept { return dim_; }
  int periods() const noexcept { return periods_; }
  double max_lag() const noexcept { return kTwoPi * periods_; }
  const std::vector<DelayAtom>& atoms() const noexcept { return atoms_; }
  const std::vector<DistributedDelay>& distributed() const noexcept { return distributed_; }
  bool empty() const noexcept { return atoms_.empty() && distributed_.empty(); }
  bool is_real() const;

  // L(x_t) for a history theta -> x(t + theta).
  Vector apply(const std::function<Vector(double)>& history) const;

  // alpha * this + other; periods is the larger of the two.
  DelayFunctional combined(cplx alpha, const DelayFunctional& other) const;

 private:
  Eigen::Index dim_;
  int periods_;
  std::vector<DelayAtom> atoms_;
  std::vector<DistributedDelay> distributed_;
};

// L_k = sum B e^{-ik lag} + sum coef * int_{-span}^0 g(theta) e^{ik theta} dtheta.
Matrix delay_symbol(const DelayFunctional& functional, int k);

// e^{-ik lag}, with the phase reduced in units of full turns so that lags that
// are exact multiples of pi give exact results.
cplx lag_phase(double lag, int k);

}  // namespace ndspec
