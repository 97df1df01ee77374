#include "ndspec/delay.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ndspec/errors.hpp"
#include "ndspec/quadrature.hpp"

namespace ndspec {

namespace {

constexpr double kLagSlack = 1e-12;

void check_coefficient(const Matrix& coefficient, Eigen::Index dim, const char* what) {
  if (coefficient.rows() != dim || coefficient.cols() != dim) {
    throw DimensionError(std::string(what) + ": coefficient is " + std::to_string(coefficient.rows()) +
                         "x" + std::to_string(coefficient.cols()) + ", expected " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
}

int symbol_panels(const DistributedDelay& part, int k) {
  const double by_period = std::ceil(part.panels_per_period * part.span / kTwoPi);
  // One panel per half wavelength of e^{ik theta} keeps the 10-point rule at
  // round-off for smooth profiles.
  const double by_oscillation = std::ceil(std::abs(static_cast<double>(k)) * part.span / std::numbers::pi);
  return std::max(1, static_cast<int>(std::max(by_period, by_oscillation)));
}

}  // namespace

DelayProfile DelayProfile::constant(double value) {
  return {[value](double) { return cplx(value); }, true, "constant"};
}

DelayProfile DelayProfile::exponential(double rate) {
  return {[rate](double theta) { return cplx(std::exp(rate * theta)); }, true, "exponential"};
}

DelayProfile DelayProfile::samples(std::vector<double> values, double span) {
  if (values.size() < 2) throw ParameterError("sampled delay profile needs at least two samples");
  if (!(span > 0.0)) throw ParameterError("sampled delay profile needs a positive span");
  auto weight = [values = std::move(values), span](double theta) {
    const double pos = (theta + span) / span * static_cast<double>(values.size() - 1);
    const double clamped = std::clamp(pos, 0.0, static_cast<double>(values.size() - 1));
    const auto i = std::min(static_cast<std::size_t>(clamped), values.size() - 2);
    const double frac = clamped - static_cast<double>(i);
    return cplx((1.0 - frac) * values[i] + frac * values[i + 1]);
  };
  return {std::move(weight), true, "samples"};
}

DelayFunctional::DelayFunctional(Eigen::Index dim, int periods) : dim_(dim), periods_(periods) {
  if (dim <= 0) throw DimensionError("delay functional: dimension must be positive");
  if (periods <= 0) throw ParameterError("delay functional: periods must be a positive integer");
}

DelayFunctional& DelayFunctional::add_atom(Matrix coefficient, double lag) {
  check_coefficient(coefficient, dim_, "delay atom");
  if (!(lag >= 0.0) || lag > max_lag() * (1.0 + kLagSlack)) {
    throw ParameterError("delay atom: lag " + std::to_string(lag) + " outside [0, " +
                         std::to_string(max_lag()) + "]");
  }
  atoms_.push_back({std::move(coefficient), lag});
  return *this;
}

DelayFunctional& DelayFunctional::add_distributed(DistributedDelay part) {
  check_coefficient(part.coefficient, dim_, "distributed delay");
  if (!(part.span > 0.0) || part.span > max_lag() * (1.0 + kLagSlack)) {
    throw ParameterError("distributed delay: span " + std::to_string(part.span) + " outside (0, " +
                         std::to_string(max_lag()) + "]");
  }
  if (!part.profile.weight) throw ParameterError("distributed delay: missing profile");
  if (part.panels_per_period <= 0) throw ParameterError("distributed delay: panels must be positive");
  distributed_.push_back(std::move(part));
  return *this;
}

bool DelayFunctional::is_real() const {
  for (const auto& atom : atoms_) {
    if (!ndspec::is_real(atom.coefficient)) return false;
  }
  for (const auto& part : distributed_) {
    if (!ndspec::is_real(part.coefficient) || !part.profile.real) return false;
  }
  return true;
}

Vector DelayFunctional::apply(const std::function<Vector(double)>& history) const {
  Vector value = Vector::Zero(dim_);
  for (const auto& atom : atoms_) value += atom.coefficient * history(-atom.lag);
  for (const auto& part : distributed_) {
    const int panels = std::max(symbol_panels(part, 0), static_cast<int>(std::ceil(8.0 * part.span)));
    const Vector integral = quadrature::composite_gauss_legendre(
        [&](double theta) -> Vector { return part.profile.weight(theta) * history(theta); },
        -part.span, 0.0, panels);
    value += part.coefficient * integral;
  }
  return value;
}

DelayFunctional DelayFunctional::combined(cplx alpha, const DelayFunctional& other) const {
  if (other.dim_ != dim_) throw DimensionError("delay functional: cannot combine different dimensions");
  DelayFunctional result(dim_, std::max(periods_, other.periods_));
  for (const auto& atom : atoms_) result.add_atom(alpha * atom.coefficient, atom.lag);
  for (const auto& part : distributed_) {
    DistributedDelay scaled = part;
    scaled.coefficient *= alpha;
    result.add_distributed(std::move(scaled));
  }
  for (const auto& atom : other.atoms_) result.add_atom(atom.coefficient, atom.lag);
  for (const auto& part : other.distributed_) result.add_distributed(part);
  return result;
}

cplx lag_phase(double lag, int k) {
  const double turns = std::remainder(static_cast<double>(k) * (lag / kTwoPi), 1.0);
  if (turns == 0.0) return 1.0;
  if (turns == 0.5 || turns == -0.5) return -1.0;
  if (turns == 0.25) return -kI;
  if (turns == -0.25) return kI;
  return std::polar(1.0, -kTwoPi * turns);
}

Matrix delay_symbol(const DelayFunctional& functional, int k) {
  Matrix symbol = Matrix::Zero(functional.dim(), functional.dim());
  for (const auto& atom : functional.atoms()) symbol += lag_phase(atom.lag, k) * atom.coefficient;
  const double kd = static_cast<double>(k);
  for (const auto& part : functional.distributed()) {
    const cplx integral = quadrature::composite_gauss_legendre(
        [&](double theta) { return part.profile.weight(theta) * std::polar(1.0, kd * theta); },
        -part.span, 0.0, symbol_panels(part, k));
    symbol += integral * part.coefficient;
  }
  return symbol;
}

}  // namespace ndspec
