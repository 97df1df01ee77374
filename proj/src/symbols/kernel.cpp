#include "ndspec/kernel.hpp"

#include <cmath>
#include <string>

#include "ndspec/errors.hpp"
#include "ndspec/quadrature.hpp"

namespace ndspec {

namespace {

double factorial(int m) { return std::tgamma(m + 1.0); }

double binomial(int n, int r) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0)));
}

void check_term(const KernelTerm& term, std::size_t index) {
  if (!(term.rate > 0.0) || !std::isfinite(term.rate)) {
    throw InvalidKernelError("kernel term " + std::to_string(index) +
                             ": rate must be > 0 for the kernel to be integrable, got " +
                             std::to_string(term.rate));
  }
  if (term.power < 0) {
    throw InvalidKernelError("kernel term " + std::to_string(index) + ": power must be >= 0");
  }
}

}  // namespace

KernelSpec::KernelSpec(std::vector<KernelTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) check_term(terms_[i], i);
}

KernelSpec& KernelSpec::add_term(cplx coefficient, int power, double rate) {
  KernelTerm term{coefficient, power, rate};
  check_term(term, terms_.size());
  terms_.push_back(term);
  return *this;
}

bool KernelSpec::is_real() const {
  for (const auto& t : terms_) {
    if (t.coefficient.imag() != 0.0) return false;
  }
  return true;
}

cplx KernelSpec::operator()(double t) const {
  if (t < 0.0) return 0.0;
  cplx value = 0.0;
  for (const auto& term : terms_) {
    value += term.coefficient * std::pow(t, term.power) * std::exp(-term.rate * t);
  }
  return value;
}

cplx KernelSpec::derivative_at_zero(int order) const {
  // d^r/dt^r [t^m e^{-at}] at 0 = C(r, m) m! (-a)^{r-m} for r >= m.
  cplx value = 0.0;
  for (const auto& term : terms_) {
    if (order < term.power) continue;
    value += term.coefficient * binomial(order, term.power) * factorial(term.power) *
             std::pow(-term.rate, order - term.power);
  }
  return value;
}

double KernelSpec::l1_bound() const {
  double total = 0.0;
  for (const auto& term : terms_) {
    total += std::abs(term.coefficient) * factorial(term.power) / std::pow(term.rate, term.power + 1);
  }
  return total;
}

double KernelSpec::tail_mass(double t) const {
  double total = 0.0;
  for (const auto& term : terms_) {
    const double at = term.rate * std::max(t, 0.0);
    double partial = 0.0;
    double power_term = 1.0;
    for (int i = 0; i <= term.power; ++i) {
      if (i > 0) power_term *= at / i;
      partial += power_term;
    }
    total += std::abs(term.coefficient) * factorial(term.power) /
             std::pow(term.rate, term.power + 1) * std::exp(-at) * partial;
  }
  return total;
}

double KernelSpec::tail_horizon(double tol) const {
  if (terms_.empty() || tail_mass(0.0) < tol) return 0.0;
  double hi = 1.0;
  while (tail_mass(hi) >= tol) hi *= 2.0;
  double lo = hi / 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail_mass(mid) >= tol ? lo : hi) = mid;
  }
  return hi;
}

cplx laplace_symbol(const KernelSpec& kernel, int k) {
  const cplx ik{0.0, static_cast<double>(k)};
  cplx value = 0.0;
  for (const auto& term : kernel.terms()) {
    value += term.coefficient * factorial(term.power) / std::pow(term.rate + ik, term.power + 1);
  }
  return value;
}

cplx laplace_symbol_numeric(const std::function<cplx(double)>& kernel, double horizon, int k,
                            int panels_per_unit) {
  if (horizon <= 0.0) return 0.0;
  const double oscillation_panels = std::ceil(std::abs(static_cast<double>(k)) * horizon / std::numbers::pi);
  const int panels = static_cast<int>(
      std::max(std::ceil(horizon * panels_per_unit), oscillation_panels));
  const double kd = static_cast<double>(k);
  return quadrature::composite_gauss_legendre(
      [&](double t) { return kernel(t) * std::polar(1.0, -kd * t); }, 0.0, horizon, panels);
}

cplx laplace_symbol_numeric(const KernelSpec& kernel, int k, double tail_tol) {
  if (kernel.empty()) return 0.0;
  const double horizon = kernel.tail_horizon(tail_tol);
  return laplace_symbol_numeric([&](double t) { return kernel(t); }, horizon, k);
}

}  // namespace ndspec
