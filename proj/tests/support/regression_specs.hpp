#pragma once

// Problems shared by the unit tests and the acceptance runner.

#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ndspec/grid.hpp"
#include "ndspec/problem.hpp"

namespace ndspec::testing {

inline constexpr double kPi = std::numbers::pi;

inline Matrix scalar(cplx value) { return Matrix::Constant(1, 1, value); }

inline Vector scalar_vector(cplx value) { return Vector::Constant(1, value); }

struct NamedSpec {
  std::string name;
  ProblemSpec spec;
};

// u' = -u + cos t, solved by (cos t + sin t) / 2.
inline ProblemSpec scalar_decay(int K = 16, int N = 64) {
  ProblemSpec spec = make_problem(scalar(-1.0), K, N);
  spec.forcing = TrigPolynomial(1).add_cos(1, scalar_vector(1.0));
  return spec;
}

// d/dt [x - x(t - 2 pi) / 2] = -(x - x(t - 2 pi) / 2) + e^{it}; u^(1) = 1 - i.
inline ProblemSpec neutral_full_period(int K = 16, int N = 64) {
  ProblemSpec spec = make_problem(scalar(-1.0), K, N);
  spec.L.add_atom(scalar(0.5), kTwoPi);
  spec.forcing = TrigPolynomial(1).add_mode(1, scalar_vector(1.0));
  return spec;
}

// Neutral atom at half the period: L_k = b (-1)^k, so Q_k = -2 b k (-1)^k grows.
inline ProblemSpec half_period_atom(double b = 0.5, int K = 16, int N = 64) {
  ProblemSpec spec = make_problem(scalar(-2.0), K, N);
  spec.L.add_atom(scalar(b), kPi);
  spec.forcing = TrigPolynomial(1).add_cos(1, scalar_vector(1.0)).add_sin(2, scalar_vector(0.5));
  return spec;
}

// Full-period atoms in L and G plus an exponential memory: every symbol is
// constant or decays, so the resolvent family is M-bounded.
inline ProblemSpec full_period_with_kernel(int K = 16, int N = 64) {
  ProblemSpec spec = make_problem(scalar(-2.0), K, N);
  spec.L.add_atom(scalar(0.5), kTwoPi);
  spec.G.add_atom(scalar(0.3), kTwoPi);
  spec.kernel.add_term(1.0, 0, 1.0);
  spec.forcing = TrigPolynomial(1)
                     .add_constant(scalar_vector(0.25))
                     .add_cos(1, scalar_vector(1.0))
                     .add_sin(3, scalar_vector(-0.5));
  return spec;
}

// Two-dimensional system with distributed and point delays on the quarter
// grid and a polynomial-exponential kernel.
inline ProblemSpec coupled_system(int K = 16, int N = 64) {
  Matrix A(2, 2);
  A << -2.0, 0.5, 0.1, -3.0;
  ProblemSpec spec = make_problem(A, K, N);

  Matrix l_coef(2, 2);
  l_coef << 0.2, 0.0, 0.05, 0.1;
  spec.L.add_distributed({l_coef, kPi, DelayProfile::exponential(1.0)});
  Matrix l_atom(2, 2);
  l_atom << 0.1, 0.0, 0.0, -0.2;
  spec.L.add_atom(l_atom, kTwoPi);

  Matrix g_atom(2, 2);
  g_atom << 0.3, -0.1, 0.0, 0.2;
  spec.G.add_atom(g_atom, kPi / 2.0);
  Matrix g_dist(2, 2);
  g_dist << 0.0, 0.1, 0.1, 0.0;
  spec.G.add_distributed({g_dist, kPi / 2.0, DelayProfile::constant(1.0)});

  spec.kernel.add_term(0.5, 1, 2.0).add_term(0.2, 0, 3.0);

  Vector c(2), s(2), m(2);
  c << 1.0, 0.0;
  s << 0.0, 1.0;
  m << 0.3, -0.2;
  spec.forcing = TrigPolynomial(2).add_constant(m).add_cos(1, c).add_sin(2, s);
  return spec;
}

// Complex data: a rotated kernel and a complex atom, so no mirror symmetry.
inline ProblemSpec complex_scalar(int K = 16, int N = 64) {
  ProblemSpec spec = make_problem(scalar(cplx(-1.5, 0.7)), K, N);
  spec.L.add_atom(scalar(cplx(0.2, 0.3)), kTwoPi);
  spec.G.add_atom(scalar(cplx(0.1, -0.4)), kPi);
  spec.kernel.add_term(cplx(0.4, -0.2), 2, 1.5);
  spec.forcing = TrigPolynomial(1).add_mode(-2, scalar_vector(cplx(0.0, 1.0))).add_mode(1, scalar_vector(1.0));
  return spec;
}

// Every solvable spec the identities are checked on.
inline std::vector<NamedSpec> regression_specs(int K = 16, int N = 64) {
  return {{"scalar_decay", scalar_decay(K, N)},
          {"neutral_full_period", neutral_full_period(K, N)},
          {"half_period_atom", half_period_atom(0.5, K, N)},
          {"full_period_with_kernel", full_period_with_kernel(K, N)},
          {"coupled_system", coupled_system(K, N)},
          {"complex_scalar", complex_scalar(K, N)}};
}

// Smooth problems whose delays sit on every grid in {64, 128, 256}.
inline std::vector<NamedSpec> smooth_suite(int K = 16, int N = 64) {
  return {{"scalar_decay", scalar_decay(K, N)},
          {"neutral_full_period", neutral_full_period(K, N)},
          {"full_period_with_kernel", full_period_with_kernel(K, N)},
          {"coupled_system", coupled_system(K, N)}};
}

inline FourierCoefficients random_coefficients(std::mt19937_64& rng, int bandwidth, Eigen::Index dim,
                                               bool real = false) {
  std::normal_distribution<double> normal;
  FourierCoefficients c(bandwidth, dim);
  for (int k = real ? 0 : -bandwidth; k <= bandwidth; ++k) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx(normal(rng), normal(rng));
    if (real && k == 0) v = v.real().cast<cplx>();
    c.set(k, v);
    if (real && k > 0) c.set(-k, v.conjugate());
  }
  return c;
}

}  // namespace ndspec::testing
