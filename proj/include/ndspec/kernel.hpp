#pragma once

#include <functional>
#include <vector>

#include "ndspec/types.hpp"

namespace ndspec {

// One term c * t^power * exp(-rate * t) of a memory kernel.
struct KernelTerm {
  cplx coefficient;
  int power = 0;
  double rate = 1.0;
};

// Memory kernel a in L^1(R+) given as a finite sum of exponential-polynomial
// terms. An empty kernel is the zero kernel.
class KernelSpec {
 public:
  KernelSpec() = default;
  explicit KernelSpec(std::vector<KernelTerm> terms);

  // Throws InvalidKernelError if rate <= 0 or power < 0.
  KernelSpec& add_term(cplx coefficient, int power, double rate);

  const std::vector<KernelTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_real() const;

  cplx operator()(double t) const;

  // r-th derivative at t = 0+.
  cplx derivative_at_zero(int order) const;

  // sum |c| m! / alpha^(m+1), an upper bound for the L^1 norm.
  double l1_bound() const;

  // Upper bound for the mass of |a| on [t, inf).
  double tail_mass(double t) const;

  // Smallest horizon T (to a doubling/bisection tolerance) with tail_mass(T) < tol.
  double tail_horizon(double tol) const;

 private:
  std::vector<KernelTerm> terms_;
};

// Laplace transform at i*k via the closed form sum c m! / (alpha + ik)^(m+1).
cplx laplace_symbol(const KernelSpec& kernel, int k);

// Quadrature route for kernels known only pointwise: composite Gauss-Legendre
// on [0, horizon] with panels refined to the oscillation e^{-ikt}.
cplx laplace_symbol_numeric(const std::function<cplx(double)>& kernel, double horizon, int k,
                            int panels_per_unit = 8);

// Same, with the horizon chosen so the truncated tail mass is below tail_tol.
cplx laplace_symbol_numeric(const KernelSpec& kernel, int k, double tail_tol = 1e-12);

}  // namespace ndspec
