#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "ndspec/errors.hpp"
#include "ndspec/oracle.hpp"
#include "ndspec/simd/kernels.hpp"

namespace ndspec {

namespace {

constexpr int kMaxFolds = 1'000'000;
constexpr int kDerivativeJumps = 16;

// B_2, B_4, ..., B_14
constexpr std::array<double, 7> kBernoulli{1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                           5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

// sup of t^p e^{-alpha t} over [lo, hi].
double sup_on(double lo, double hi, int power, double rate) {
  const double peak = power / rate;
  const double t = peak < lo ? lo : (peak > hi ? hi : peak);
  return std::pow(t, power) * std::exp(-rate * t);
}

double tail_bound(const KernelSpec& kernel, int folds) {
  double total = 0.0;
  for (const auto& term : kernel.terms()) {
    const double peak = term.power / term.rate;
    const double scale = std::abs(term.coefficient);
    double partial = 0.0;
    for (long long m = folds + 1; m < 100'000'000LL; ++m) {
      const double lo = kTwoPi * static_cast<double>(m);
      const double value = scale * sup_on(lo, lo + kTwoPi, term.power, term.rate);
      partial += value;
      if (lo > peak && value <= 1e-20 * partial) break;
      if (value == 0.0 && lo > peak) break;
    }
    total += partial;
  }
  return total;
}

double binomial(int n, int r) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0)));
}

}  // namespace

cplx PeriodizedKernel::wrap_average() const {
  if (samples.empty()) return 0.0;
  return samples[0] - 0.5 * wrap_jumps[0];
}

cplx PeriodizedKernel::fourier_integral(int k) const {
  if (samples.empty()) return 0.0;
  const int n = grid_size;
  const double h = kTwoPi / n;

  std::vector<cplx> row(n);
  for (int l = 0; l < n; ++l) {
    row[l] = std::polar(1.0, -kTwoPi * static_cast<double>((static_cast<long long>(k) * l) % n) / n);
  }
  // Trapezoidal over [0, 2 pi] with one-sided end values a_bar(0+) and
  // a_bar(2 pi-) = a_bar(0+) - a(0).
  cplx integral = h * (simd::dot(samples, row) - 0.5 * wrap_jumps[0]);

  // Euler-Maclaurin: subtract B_2m / (2m)! h^2m [g^(2m-1)]_0^{2 pi} for
  // g = a_bar e^{-ik tau}, whose derivative jumps follow from a^(i)(0).
  const cplx mik{0.0, -static_cast<double>(k)};
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
    const int r = static_cast<int>(2 * m - 1);
    if (r >= static_cast<int>(wrap_jumps.size())) break;
    cplx jump = 0.0;
    for (int i = 0; i <= r; ++i) jump -= binomial(r, i) * std::pow(mik, r - i) * wrap_jumps[i];
    const cplx correction = kBernoulli[m - 1] / std::tgamma(2.0 * m + 1.0) * std::pow(h, 2.0 * m) * jump;
    // The series is asymptotic; stop once terms stop shrinking.
    if (previous > 0.0 && std::abs(correction) > previous) break;
    integral -= correction;
    previous = std::abs(correction);
  }
  return integral;
}

PeriodizedKernel periodize_kernel(const KernelSpec& kernel, int grid_size, double tol) {
  if (grid_size <= 0) throw ParameterError("periodize: grid size must be positive");
  PeriodizedKernel out;
  out.grid_size = grid_size;
  out.samples.assign(grid_size, 0.0);
  out.wrap_jumps.assign(kDerivativeJumps, 0.0);
  if (kernel.empty()) return out;

  const double budget = tol * kernel.l1_bound();
  int folds = 0;
  if (tail_bound(kernel, 0) > budget) {
    int lo = 0;
    int hi = 1;
    while (tail_bound(kernel, hi) > budget) {
      if (hi >= kMaxFolds) {
        throw Error("periodize: tolerance " + std::to_string(tol) + " unreachable within " +
                    std::to_string(kMaxFolds) + " folds");
      }
      lo = hi;
      hi = std::min(2 * hi, kMaxFolds);
    }
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      (tail_bound(kernel, mid) > budget ? lo : hi) = mid;
    }
    folds = hi;
  }
  out.folds = folds;
  out.tail_bound = tail_bound(kernel, folds);

  for (int l = 0; l < grid_size; ++l) {
    const double tau = grid_node(l, grid_size);
    cplx value = 0.0;
    for (int m = 0; m <= folds; ++m) value += kernel(tau + kTwoPi * m);
    out.samples[l] = value;
  }
  for (int r = 0; r < kDerivativeJumps; ++r) out.wrap_jumps[r] = kernel.derivative_at_zero(r);
  return out;
}

}  // namespace ndspec
