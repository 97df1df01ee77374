#include <atomic>

#include "ndspec/errors.hpp"
#include "ndspec/simd/kernels.hpp"

namespace ndspec::simd {

namespace {

struct KernelTable {
  Backend backend;
  cplx (*dot)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*accumulate_abs2)(const cplx*, double*, std::size_t);
};

constexpr KernelTable kScalarTable{Backend::kScalar, &scalar::dot, &scalar::axpy,
                                   &scalar::accumulate_abs2};
#if defined(NDSPEC_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Backend::kAvx2, &avx2::dot, &avx2::axpy, &avx2::accumulate_abs2};
#endif
#if defined(NDSPEC_HAVE_NEON)
constexpr KernelTable kNeonTable{Backend::kNeon, &neon::dot, &neon::axpy, &neon::accumulate_abs2};
#endif

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
#if defined(NDSPEC_HAVE_AVX2)
      return &kAvx2Table;
#else
      return nullptr;
#endif
    case Backend::kNeon:
#if defined(NDSPEC_HAVE_NEON)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* best_table() {
  if (backend_available(Backend::kAvx2)) return table_for(Backend::kAvx2);
  if (backend_available(Backend::kNeon)) return table_for(Backend::kNeon);
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best_table()};
  return table;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("simd kernel: operand lengths differ");
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(NDSPEC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(NDSPEC_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_acquire)->backend; }

void force_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw ParameterError("simd backend '" + std::string(backend_name(backend)) +
                         "' is not available on this machine");
  }
  current().store(table_for(backend), std::memory_order_release);
}

void reset_backend() { current().store(best_table(), std::memory_order_release); }

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  check_sizes(a.size(), b.size());
  return current().load(std::memory_order_acquire)->dot(a.data(), b.data(), a.size());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  check_sizes(x.size(), y.size());
  current().load(std::memory_order_acquire)->axpy(alpha, x.data(), y.data(), x.size());
}

void accumulate_abs2(std::span<const cplx> x, std::span<double> acc) {
  check_sizes(x.size(), acc.size());
  current().load(std::memory_order_acquire)->accumulate_abs2(x.data(), acc.data(), x.size());
}

}  // namespace ndspec::simd
