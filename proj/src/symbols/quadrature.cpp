#include "ndspec/quadrature.hpp"

#include <numbers>

namespace ndspec::quadrature {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendre10 build() {
  constexpr int n = 10;
  GaussLegendre10 rule{};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendre10& gauss_legendre_10() {
  static const GaussLegendre10 rule = build();
  return rule;
}

}  // namespace ndspec::quadrature
