#include "ndspec/simd/kernels.hpp"

namespace ndspec::simd::scalar {

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
  }
}

void accumulate_abs2(const cplx* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

}  // namespace ndspec::simd::scalar
