#include <algorithm>
#include <cmath>
#include <functional>

#include "ndspec/errors.hpp"
#include "ndspec/resolvent.hpp"

namespace ndspec {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kBounded:
      return "bounded";
    case Verdict::kGrowing:
      return "growing";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

const MBoundRow& MBoundReport::row(const std::string& name) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const MBoundRow& r) { return r.name == name; });
  if (it == rows.end()) throw ParameterError("no diagnostic row named '" + name + "'");
  return *it;
}

namespace {

// A symbol sequence sampled on k = -window..window.
struct Sequence {
  std::string name;
  std::vector<Matrix> values;
};

// Least-squares slope of log(value) against log(k).
double fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [k, v] : points) {
    const double x = std::log(k);
    const double y = std::log(std::max(v, kNormFloor));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

double max_over(const std::vector<std::pair<double, double>>& points, double lo, double hi) {
  double best = 0.0;
  for (const auto& [k, v] : points) {
    if (k >= lo && k <= hi) best = std::max(best, v);
  }
  return std::max(best, kNormFloor);
}

MBoundRow analyse(const Sequence& seq, int window) {
  MBoundRow row;
  row.name = seq.name;
  const auto at = [&](int k) -> const Matrix& { return seq.values[static_cast<std::size_t>(k + window)]; };

  std::vector<double> norms(seq.values.size());
  for (int k = -window; k <= window; ++k) {
    norms[static_cast<std::size_t>(k + window)] = operator_norm(at(k));
  }
  std::vector<double> diffs(seq.values.size(), 0.0);
  for (int k = -window; k < window; ++k) {
    diffs[static_cast<std::size_t>(k + window)] = operator_norm(static_cast<double>(k) * (at(k + 1) - at(k)));
  }
  row.sup_norm = *std::max_element(norms.begin(), norms.end());
  row.sup_scaled_diff = *std::max_element(diffs.begin(), diffs.end());

  if (window < kMinDiagnosticWindow) {
    row.verdict = Verdict::kInconclusive;
    return row;
  }

  // Fold +k and -k together and fit on the outer three quarters of the window.
  const int lo = std::max(1, window / 4);
  std::vector<std::pair<double, double>> norm_tail, diff_tail;
  for (int m = lo; m <= window; ++m) {
    const auto ip = static_cast<std::size_t>(m + window);
    const auto in = static_cast<std::size_t>(-m + window);
    norm_tail.emplace_back(m, std::max(norms[ip], norms[in]));
    if (m < window) diff_tail.emplace_back(m, std::max(diffs[ip], diffs[in]));
  }
  row.growth_exponent = fit_exponent(norm_tail);
  row.diff_growth_exponent = fit_exponent(diff_tail);

  const double half = window / 2.0;
  const bool norm_tail_ok = max_over(norm_tail, half + 0.5, window) <= 2.0 * max_over(norm_tail, lo, half);
  const bool diff_tail_ok = max_over(diff_tail, half + 0.5, window) <= 2.0 * max_over(diff_tail, lo, half);

  const double worst = std::max(row.growth_exponent, row.diff_growth_exponent);
  if (worst < kGrowthThreshold && norm_tail_ok && diff_tail_ok) {
    row.verdict = Verdict::kBounded;
  } else if (worst > kGrowthThreshold) {
    row.verdict = Verdict::kGrowing;
  } else {
    row.verdict = Verdict::kInconclusive;
  }
  return row;
}

Matrix scalar_matrix(cplx value) { return Matrix::Constant(1, 1, value); }

}  // namespace

MBoundReport m_bounded_diagnostics(const ProblemSpec& spec, int window, double singular_condition) {
  if (window < 0) throw ParameterError("diagnostics: window must be non-negative");
  const ResolventFamily family = resolvent_family(spec, window, singular_condition);
  const ModalSymbols beyond = modal_symbols(spec, window + 1);

  Sequence N{"N", {}}, S{"S", {}}, T{"T", {}}, F{"F", {}};
  Sequence P{"P", {}}, Q{"Q", {}}, R{"R", {}}, B{"B", {}};
  Sequence L{"L", {}}, G{"G", {}}, a{"a~", {}};

  MBoundReport report;
  report.window = window;
  for (int k = -window; k <= window; ++k) {
    const ResolventMode& mode = family.at(k);
    const ModalSymbols& next = k < window ? family.at(k + 1).symbols : beyond;
    const DifferenceSequences d = difference_sequences(spec.A, mode.symbols, next);
    N.values.push_back(mode.N);
    S.values.push_back(mode.S);
    T.values.push_back(mode.T);
    F.values.push_back(mode.F);
    P.values.push_back(scalar_matrix(d.P));
    Q.values.push_back(d.Q);
    R.values.push_back(d.R);
    B.values.push_back(d.B);
    L.values.push_back(mode.symbols.L);
    G.values.push_back(mode.symbols.G);
    a.values.push_back(scalar_matrix(mode.symbols.kernel));
    report.max_condition = std::max(report.max_condition, mode.condition);
  }

  for (const Sequence* seq : {&N, &S, &T, &F, &P, &Q, &R, &B, &L, &G, &a}) {
    report.rows.push_back(analyse(*seq, window));
  }

  const auto bounded = [&](const char* name) { return report.row(name).verdict == Verdict::kBounded; };
  report.h1 = bounded("L") && bounded("G") && bounded("a~");
  report.h2 = bounded("B");
  if (report.h1 && report.h2 && bounded("S")) {
    report.implication_violated = !(bounded("N") && bounded("T") && bounded("F"));
  }
  return report;
}

}  // namespace ndspec
