#pragma once

// Complex inner-loop kernels shared by the transforms and grid norms.
//
// Every kernel has a scalar reference implementation; AVX2+FMA (x86-64) and
// NEON (AArch64) variants are compiled when the target supports them and
// picked at runtime. The variants must agree with the scalar reference to
// round-off; tests/unit/simd_kernels_test.cpp enforces that.

#include <cstddef>
#include <span>
#include <string_view>

#include "ndspec/types.hpp"

namespace ndspec::simd {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend backend);

// Compiled in and supported by the running CPU.
bool backend_available(Backend backend);

Backend active_backend();

// Overrides the runtime choice. Not thread-safe; intended for tests and
// benchmarks. Throws ParameterError if the backend is unavailable.
void force_backend(Backend backend);

// Restores the best available backend.
void reset_backend();

// sum_i a[i] * b[i]
cplx dot(std::span<const cplx> a, std::span<const cplx> b);

// y[i] += alpha * x[i]
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

// acc[i] += |x[i]|^2
void accumulate_abs2(std::span<const cplx> x, std::span<double> acc);

// Per-backend entry points. Sizes are checked by the dispatching wrappers
// above, not here.
namespace scalar {
cplx dot(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void accumulate_abs2(const cplx* x, double* acc, std::size_t n);
}  // namespace scalar

namespace avx2 {
cplx dot(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void accumulate_abs2(const cplx* x, double* acc, std::size_t n);
}  // namespace avx2

namespace neon {
cplx dot(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void accumulate_abs2(const cplx* x, double* acc, std::size_t n);
}  // namespace neon

}  // namespace ndspec::simd
