// Compiled with -mavx2 -mfma; only entered after a runtime CPU check.
#include "ndspec/simd/kernels.hpp"

#if defined(NDSPEC_HAVE_AVX2)

#include <immintrin.h>

namespace ndspec::simd::avx2 {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (a * b) lane-wise as complex products.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

}  // namespace

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(load2(a + i), load2(b + i)));
    acc1 = _mm256_add_pd(acc1, cmul(load2(a + i + 2), load2(b + i + 2)));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = _mm256_add_pd(acc0, cmul(load2(a + i), load2(b + i)));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  alignas(16) double sum[2];
  _mm_store_pd(sum, _mm_add_pd(lo, hi));
  cplx result{sum[0], sum[1]};
  if (i < n) result += scalar::dot(a + i, b + i, n - i);
  return result;
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d alpha_v = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(load2(x + i), alpha_v)));
  }
  if (i < n) scalar::axpy(alpha, x + i, y + i, n - i);
}

void accumulate_abs2(const cplx* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(x + i);
    const __m256d v1 = load2(x + i + 2);
    // hadd -> [|x0|^2, |x2|^2, |x1|^2, |x3|^2]
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    const __m256d ordered = _mm256_permute4x64_pd(h, 0xD8);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), ordered));
  }
  if (i < n) scalar::accumulate_abs2(x + i, acc + i, n - i);
}

}  // namespace ndspec::simd::avx2

#endif  // NDSPEC_HAVE_AVX2
