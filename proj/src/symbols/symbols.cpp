#include "ndspec/symbols.hpp"

namespace ndspec {

ModalSymbols modal_symbols(const ProblemSpec& spec, int k) {
  ModalSymbols s;
  s.k = k;
  s.L = delay_symbol(spec.L, k);
  s.G = delay_symbol(spec.G, k);
  s.D = Matrix::Identity(spec.dim(), spec.dim()) - s.L;
  s.kernel = laplace_symbol(spec.kernel, k);
  return s;
}

DifferenceSequences difference_sequences(const Matrix& A, const ModalSymbols& at_k,
                                         const ModalSymbols& at_k_plus_1) {
  const double k = at_k.k;
  DifferenceSequences d;
  d.P = k * (at_k_plus_1.kernel - at_k.kernel);
  d.Q = k * (at_k_plus_1.L - at_k.L);
  d.R = k * (at_k_plus_1.G - at_k.G);
  d.B = A * d.Q;
  return d;
}

DifferenceSequences difference_sequences(const ProblemSpec& spec, int k) {
  return difference_sequences(spec.A, modal_symbols(spec, k), modal_symbols(spec, k + 1));
}

}  // namespace ndspec
