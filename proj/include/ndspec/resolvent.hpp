#pragma once

#include <string>
#include <vector>

#include "ndspec/symbols.hpp"

namespace ndspec {

// Condition numbers above this flag a mode as numerically singular.
inline constexpr double kSingularCondition = 1e12;

// M(k) = ik D_k - A D_k - G_k - a~(ik) I
Matrix assemble_modal_matrix(const ProblemSpec& spec, int k);
Matrix assemble_modal_matrix(const Matrix& A, const ModalSymbols& symbols);

// 2-norm condition number of a square matrix (inf when singular).
double condition_number(const Matrix& m);

// N_k = M(k)^{-1}. Throws SingularModeError naming k when the condition
// number exceeds `singular_condition`.
Matrix invert_modal_matrix(const Matrix& modal, int k, double singular_condition = kSingularCondition);

struct ResolventMode {
  int k = 0;
  ModalSymbols symbols;
  Matrix M;  // modal matrix
  Matrix C;  // ik D_k - G_k - a~(ik) I
  Matrix N;  // M^{-1}
  Matrix S;  // ik N_k
  Matrix T;  // G_k N_k
  Matrix F;  // a~(ik) N_k
  double condition = 0.0;
  double norm_N = 0.0;
  double norm_S = 0.0;
  double norm_T = 0.0;
  double norm_F = 0.0;
};

// Resolvent data for every |k| <= window, ascending k.
class ResolventFamily {
 public:
  ResolventFamily(Matrix A, int window, std::vector<ResolventMode> modes);

  int window() const noexcept { return window_; }
  const Matrix& A() const noexcept { return A_; }
  const std::vector<ResolventMode>& modes() const noexcept { return modes_; }
  const ResolventMode& at(int k) const;

 private:
  Matrix A_;
  int window_;
  std::vector<ResolventMode> modes_;
};

ResolventFamily resolvent_family(const ProblemSpec& spec, int window,
                                 double singular_condition = kSingularCondition);

// max_k || M(k) N_k - I ||
double verify_modal_identity(const ResolventFamily& family);

// max_k || D_k S_k - A D_k N_k - T_k - a~(ik) N_k - I ||, the form used when
// reading off the solution components.
double verify_split_identity(const ResolventFamily& family);

// max_k || N_{-k} - conj(N_k) || (meaningful for real data only).
double conjugate_symmetry_defect(const ResolventFamily& family);

// || k (C_k - C_{k+1}) - (-ik I + ik L_{k+1} + ik Q_k + R_k + P_k I) ||,
// both sides evaluated in extended precision from the computed symbols.
double telescoping_check(const ProblemSpec& spec, int k);
double telescoping_check(const Matrix& A, const ModalSymbols& at_k, const ModalSymbols& at_k_plus_1);

enum class Verdict { kBounded, kGrowing, kInconclusive };

std::string to_string(Verdict verdict);

struct MBoundRow {
  std::string name;
  double sup_norm = 0.0;
  double sup_scaled_diff = 0.0;
  double growth_exponent = 0.0;       // fitted to ||M_k|| on the tail
  double diff_growth_exponent = 0.0;  // fitted to ||k (M_{k+1} - M_k)||
  Verdict verdict = Verdict::kInconclusive;
};

struct MBoundReport {
  int window = 0;
  std::vector<MBoundRow> rows;  // N, S, T, F, P, Q, R, B, L, G, a~
  bool h1 = false;              // L, G, a~ rows bounded
  bool h2 = false;              // B row bounded
  double max_condition = 0.0;
  // H1 and H2 hold, every mode inverts and S is bounded, yet some of N, S, T, F
  // is not classified bounded. Should never be true.
  bool implication_violated = false;

  const MBoundRow& row(const std::string& name) const;
};

// Exponent threshold separating bounded from growing sequences.
inline constexpr double kGrowthThreshold = 0.1;
// Norms below this are treated as exact zeros when fitting exponents.
inline constexpr double kNormFloor = 1e-11;
// Smallest window for which verdicts are attempted.
inline constexpr int kMinDiagnosticWindow = 16;

// Throws SingularModeError if some M(k) in the window cannot be inverted.
MBoundReport m_bounded_diagnostics(const ProblemSpec& spec, int window,
                                   double singular_condition = kSingularCondition);

}  // namespace ndspec
