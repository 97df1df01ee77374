#pragma once

#include "ndspec/delay.hpp"
#include "ndspec/kernel.hpp"
#include "ndspec/problem.hpp"

namespace ndspec {

// Fourier-side symbols of every term at one mode k.
struct ModalSymbols {
  int k = 0;
  Matrix L;      // L_k
  Matrix G;      // G_k
  Matrix D;      // D_k = I - L_k
  cplx kernel;   // a~(ik)
};

ModalSymbols modal_symbols(const ProblemSpec& spec, int k);

// Scaled first differences of the symbol sequences at mode k:
//   P_k = k (a~(i(k+1)) - a~(ik)),  Q_k = k (L_{k+1} - L_k),
//   R_k = k (G_{k+1} - G_k),        B_k = k A (L_{k+1} - L_k).
struct DifferenceSequences {
  cplx P;
  Matrix Q;
  Matrix R;
  Matrix B;
};

DifferenceSequences difference_sequences(const ProblemSpec& spec, int k);
DifferenceSequences difference_sequences(const Matrix& A, const ModalSymbols& at_k,
                                         const ModalSymbols& at_k_plus_1);

}  // namespace ndspec
