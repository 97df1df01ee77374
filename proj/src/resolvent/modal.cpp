#include <cmath>
#include <limits>
#include <string>

#include "ndspec/errors.hpp"
#include "ndspec/resolvent.hpp"

namespace ndspec {

Matrix assemble_modal_matrix(const Matrix& A, const ModalSymbols& symbols) {
  const cplx ik{0.0, static_cast<double>(symbols.k)};
  Matrix m = ik * symbols.D - A * symbols.D - symbols.G;
  m.diagonal().array() -= symbols.kernel;
  return m;
}

Matrix assemble_modal_matrix(const ProblemSpec& spec, int k) {
  return assemble_modal_matrix(spec.A, modal_symbols(spec, k));
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

Matrix invert_modal_matrix(const Matrix& modal, int k, double singular_condition) {
  const double cond = condition_number(modal);
  if (!(cond <= singular_condition)) {
    throw SingularModeError(k, cond,
                            "modal matrix M(" + std::to_string(k) + ") is numerically singular (condition " +
                                (std::isfinite(cond) ? std::to_string(cond) : std::string("inf")) + ")");
  }
  return modal.partialPivLu().inverse();
}

ResolventFamily::ResolventFamily(Matrix A, int window, std::vector<ResolventMode> modes)
    : A_(std::move(A)), window_(window), modes_(std::move(modes)) {}

const ResolventMode& ResolventFamily::at(int k) const {
  if (k < -window_ || k > window_) throw ParameterError("mode " + std::to_string(k) + " outside window");
  return modes_[static_cast<std::size_t>(k + window_)];
}

ResolventFamily resolvent_family(const ProblemSpec& spec, int window, double singular_condition) {
  if (window < 0) throw ParameterError("resolvent family: window must be non-negative");
  const Eigen::Index n = spec.dim();
  std::vector<ResolventMode> modes;
  modes.reserve(static_cast<std::size_t>(2 * window + 1));
  for (int k = -window; k <= window; ++k) {
    ResolventMode mode;
    mode.k = k;
    mode.symbols = modal_symbols(spec, k);
    const cplx ik{0.0, static_cast<double>(k)};
    mode.M = assemble_modal_matrix(spec.A, mode.symbols);
    mode.C = ik * mode.symbols.D - mode.symbols.G - mode.symbols.kernel * Matrix::Identity(n, n);
    mode.condition = condition_number(mode.M);
    mode.N = invert_modal_matrix(mode.M, k, singular_condition);
    mode.S = ik * mode.N;
    mode.T = mode.symbols.G * mode.N;
    mode.F = mode.symbols.kernel * mode.N;
    mode.norm_N = operator_norm(mode.N);
    mode.norm_S = operator_norm(mode.S);
    mode.norm_T = operator_norm(mode.T);
    mode.norm_F = operator_norm(mode.F);
    modes.push_back(std::move(mode));
  }
  return ResolventFamily(spec.A, window, std::move(modes));
}

double verify_modal_identity(const ResolventFamily& family) {
  double worst = 0.0;
  for (const auto& mode : family.modes()) {
    const Matrix identity = Matrix::Identity(mode.N.rows(), mode.N.cols());
    worst = std::max(worst, operator_norm(mode.M * mode.N - identity));
  }
  return worst;
}

double verify_split_identity(const ResolventFamily& family) {
  double worst = 0.0;
  for (const auto& mode : family.modes()) {
    const Matrix identity = Matrix::Identity(mode.N.rows(), mode.N.cols());
    const Matrix lhs = mode.symbols.D * mode.S - family.A() * mode.symbols.D * mode.N - mode.T -
                       mode.symbols.kernel * mode.N;
    worst = std::max(worst, operator_norm(lhs - identity));
  }
  return worst;
}

double conjugate_symmetry_defect(const ResolventFamily& family) {
  double worst = 0.0;
  for (int k = 1; k <= family.window(); ++k) {
    worst = std::max(worst, operator_norm(family.at(-k).N - family.at(k).N.conjugate()));
  }
  return worst;
}

namespace {

using cplxl = std::complex<long double>;
using MatrixL = Eigen::Matrix<cplxl, Eigen::Dynamic, Eigen::Dynamic>;

MatrixL widen(const Matrix& m) { return m.cast<cplxl>(); }

}  // namespace

double telescoping_check(const Matrix& A, const ModalSymbols& at_k, const ModalSymbols& at_k_plus_1) {
  (void)A;  // A D_k cancels out of C_k; kept for symmetry with difference_sequences.
  const Eigen::Index n = at_k.L.rows();
  const long double k = at_k.k;
  const cplxl ik{0.0L, k};
  const cplxl ik1{0.0L, k + 1.0L};
  const MatrixL I = MatrixL::Identity(n, n);

  const MatrixL L0 = widen(at_k.L), L1 = widen(at_k_plus_1.L);
  const MatrixL G0 = widen(at_k.G), G1 = widen(at_k_plus_1.G);
  const cplxl a0 = at_k.kernel, a1 = at_k_plus_1.kernel;

  const MatrixL C0 = ik * (I - L0) - G0 - a0 * I;
  const MatrixL C1 = ik1 * (I - L1) - G1 - a1 * I;
  const MatrixL lhs = k * (C0 - C1);

  const MatrixL Q = k * (L1 - L0);
  const MatrixL R = k * (G1 - G0);
  const cplxl P = k * (a1 - a0);
  const MatrixL rhs = -ik * I + ik * L1 + ik * Q + R + P * I;

  const MatrixL diff = lhs - rhs;
  return operator_norm(Matrix(diff.cast<cplx>()));
}

double telescoping_check(const ProblemSpec& spec, int k) {
  return telescoping_check(spec.A, modal_symbols(spec, k), modal_symbols(spec, k + 1));
}

}  // namespace ndspec
