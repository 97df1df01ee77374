#pragma once

// Reference values computed independently in 40-digit arithmetic (adaptive
// quadrature and direct summation in mpmath), rounded to 20 digits.

#include "ndspec/types.hpp"

namespace ndspec::reference {

// int_0^inf a(t) e^{-ikt} dt
inline const cplx kExpKernelAtOne{0.5, -0.5};                                 // e^{-t}, k = 1
inline const cplx kTExp2KernelAtThree{-0.029585798816568047337, -0.071005917159763313609};  // t e^{-2t}, k = 3
inline const cplx kT2KernelAtMinusTwo{-0.0838656, 0.0315392};                 // 0.7 t^2 e^{-1.5t}, k = -2

// P_k = k (a~(i(k+1)) - a~(ik)) for a = e^{-t}
inline const cplx kExpP1{-0.3, 0.1};
inline const cplx kExpP7{-0.032307692307692307692, 0.11846153846153846154};
inline const cplx kExpPMinus4{-0.16470588235294117647, -0.25882352941176470588};

// int_{-span}^0 g(theta) e^{ik theta} dtheta
inline const cplx kExpProfileSpanPiK3{0.10432139182637722498, -0.31296417547913167493};  // g = e^theta
inline const cplx kConstProfileSpanHalfPiK2{0.0, -1.0};                                   // g = 1

// Diagonal of N_k for A = diag(-1, -2), a = e^{-t}
inline const cplx kDiagN1First{0.2, -0.6};
inline const cplx kDiagN1Second{0.33333333333333333333, -0.33333333333333333333};
inline const cplx kDiagN3First{0.076923076923076923077, -0.28205128205128205128};
inline const cplx kDiagN3Second{0.13103448275862068966, -0.22758620689655172414};

// Periodized e^{-t} at tau = 1, and its Fourier integral over a period at k = 1
inline constexpr double kPeriodizedExpAtOne = 0.36856772028182479841;
inline const cplx kPeriodizedExpFourierK1{0.5, -0.5};

// Besov quantities for e_3 with s = 1, p = q = 2
inline constexpr double kBesovE3 = 5.6049912163979286993;
inline constexpr double kDerivativeShiftE3 = 0.813489216819960645;

inline constexpr double kFourierTypeR2 = 0.39894228040143267794;  // 1 / sqrt(2 pi)
inline constexpr double kScalarSymbolAtThree = 0.9486832980505137996;  // |3i / (1 + 3i)|

// Mean and third coefficient of 1 / (2 - cos t)
inline constexpr double kAnalyticForcingMean = 0.57735026918962576451;
inline constexpr double kAnalyticForcingThird = 0.011106998930269877238;

}  // namespace ndspec::reference
