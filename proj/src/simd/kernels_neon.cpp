#include "ndspec/simd/kernels.hpp"

#if defined(NDSPEC_HAVE_NEON)

#include <arm_neon.h>

namespace ndspec::simd::neon {

namespace {

// One complex number per register: [re, im].
inline float64x2_t load1(const cplx* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }

inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  const float64x2_t b_re = vdupq_laneq_f64(b, 0);
  const float64x2_t b_im = vdupq_laneq_f64(b, 1);
  const float64x2_t a_swap = vextq_f64(a, a, 1);  // [im, re]
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_f64(vmulq_f64(a, b_re), vmulq_f64(a_swap, sign), b_im);
}

}  // namespace

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc0 = vaddq_f64(acc0, cmul(load1(a + i), load1(b + i)));
    acc1 = vaddq_f64(acc1, cmul(load1(a + i + 1), load1(b + i + 1)));
  }
  if (i < n) acc0 = vaddq_f64(acc0, cmul(load1(a + i), load1(b + i)));
  const float64x2_t acc = vaddq_f64(acc0, acc1);
  return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const float64x2_t alpha_v = {alpha.real(), alpha.imag()};
  for (std::size_t i = 0; i < n; ++i) {
    double* yp = reinterpret_cast<double*>(y + i);
    vst1q_f64(yp, vaddq_f64(vld1q_f64(yp), cmul(load1(x + i), alpha_v)));
  }
}

void accumulate_abs2(const cplx* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = load1(x + i);
    acc[i] += vaddvq_f64(vmulq_f64(v, v));
  }
}

}  // namespace ndspec::simd::neon

#endif  // NDSPEC_HAVE_NEON
