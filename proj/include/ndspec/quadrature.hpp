#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <type_traits>

namespace ndspec::quadrature {

// Nodes and weights of the 10-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre10 {
  std::array<double, 10> nodes;
  std::array<double, 10> weights;
};

const GaussLegendre10& gauss_legendre_10();

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
template <class F>
auto composite_gauss_legendre(F&& f, double a, double b, int panels) {
  const auto& rule = gauss_legendre_10();
  const double width = (b - a) / panels;
  using Result = std::decay_t<decltype(f(a))>;
  // Seeded from the first term so dynamically sized results get their shape.
  std::optional<Result> total;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      Result term = f(mid + 0.5 * width * rule.nodes[i]);
      term *= 0.5 * width * rule.weights[i];
      if (total) {
        *total += term;
      } else {
        total = std::move(term);
      }
    }
  }
  return total ? *total : Result{};
}

}  // namespace ndspec::quadrature
