#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace ndspec {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Spectral (2-)norm; the state dimension is small so a full SVD is fine.
double operator_norm(const Matrix& m);

// True when every entry has zero imaginary part.
bool is_real(const Matrix& m);

}  // namespace ndspec
