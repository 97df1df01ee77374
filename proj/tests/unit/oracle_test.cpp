#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "ndspec/compare.hpp"
#include "ndspec/errors.hpp"
#include "ndspec/oracle.hpp"
#include "reference_values.hpp"
#include "regression_specs.hpp"

namespace ndspec {
namespace {

using testing::kPi;
using testing::scalar;
using testing::scalar_vector;

TEST(Periodize, ExponentialKernelGeometricSeries) {
  KernelSpec a;
  a.add_term(1.0, 0, 1.0);
  const PeriodizedKernel p = periodize_kernel(a, 64, 1e-16);
  for (int l = 1; l < 64; ++l) {
    const double tau = grid_node(l, 64);
    EXPECT_NEAR(p.samples[static_cast<std::size_t>(l)].real(), std::exp(-tau) / (1.0 - std::exp(-kTwoPi)), 1e-15);
  }
  EXPECT_GT(p.folds, 0);
  EXPECT_LE(p.tail_bound, 1e-16 * a.l1_bound());
  // Right limit at tau = 0, and the wrap average drops half the jump a(0).
  EXPECT_NEAR(p.samples[0].real(), 1.0 / (1.0 - std::exp(-kTwoPi)), 1e-15);
  EXPECT_NEAR(p.wrap_average().real(), 1.0 / (1.0 - std::exp(-kTwoPi)) - 0.5, 1e-15);
}

TEST(Periodize, ValueAtOne) {
  // Direct sum of e^{-(1 + 2 pi m)}; 1 is not a node, so sum the kernel directly.
  KernelSpec a;
  a.add_term(1.0, 0, 1.0);
  const PeriodizedKernel p = periodize_kernel(a, 8, 1e-16);
  double sum = 0.0;
  for (int m = 0; m <= p.folds; ++m) sum += a(1.0 + kTwoPi * m).real();
  EXPECT_NEAR(sum, reference::kPeriodizedExpAtOne, 1e-15);
}

TEST(Periodize, ZeroKernel) {
  const PeriodizedKernel p = periodize_kernel(KernelSpec{}, 16);
  EXPECT_EQ(p.folds, 0);
  for (const cplx& v : p.samples) EXPECT_EQ(v, cplx(0.0, 0.0));
  EXPECT_EQ(p.fourier_integral(3), cplx(0.0, 0.0));
}

TEST(Periodize, FourierIntegralMatchesLaplaceSymbol) {
  KernelSpec a;
  a.add_term(1.0, 0, 1.0);
  const PeriodizedKernel p = periodize_kernel(a, 1024);
  EXPECT_LT(std::abs(p.fourier_integral(1) - reference::kPeriodizedExpFourierK1), 1e-8);
  for (int k = -64; k <= 64; ++k) EXPECT_LT(std::abs(p.fourier_integral(k) - laplace_symbol(a, k)), 1e-8) << k;
}

TEST(Periodize, SlowKernelNeedsManyFolds) {
  KernelSpec a;
  a.add_term(1.0, 0, 1e-6);
  EXPECT_THROW(periodize_kernel(a, 16), Error);
  EXPECT_THROW(periodize_kernel(a, 0), ParameterError);
}

TEST(Collocation, CosineBenchmarkSecondOrder) {
  const ProblemSpec spec = testing::scalar_decay(16, 256);
  const PeriodicGridFunction x = collocation_solve(spec, 256);
  double worst = 0.0;
  for (int j = 0; j < 256; ++j) {
    const double t = grid_node(j, 256);
    worst = std::max(worst, std::abs(x.samples()(j, 0) - 0.5 * (std::cos(t) + std::sin(t))));
  }
  EXPECT_LE(worst, 1e-3);
}

TEST(Collocation, ZeroForcing) {
  ProblemSpec spec = testing::coupled_system();
  spec.forcing = Forcing::zero(2);
  EXPECT_EQ(grid_max_norm(collocation_solve(spec, 64).samples()), 0.0);
}

TEST(Collocation, NeutralFullPeriod) {
  const ProblemSpec spec = testing::neutral_full_period();
  const PeriodicGridFunction coarse = collocation_solve(spec, 128);
  const PeriodicGridFunction fine = collocation_solve(spec, 256);
  const double e_coarse = std::abs(coarse.coefficients().at(1)(0) - cplx(1.0, -1.0));
  const double e_fine = std::abs(fine.coefficients().at(1)(0) - cplx(1.0, -1.0));
  EXPECT_LT(e_fine, 1e-3);
  EXPECT_NEAR(e_coarse / e_fine, 4.0, 0.8);
}

TEST(Collocation, OffGridLag) {
  ProblemSpec spec = testing::scalar_decay(4, 16);
  spec.G.add_atom(scalar(0.2), 1.0);
  EXPECT_THROW(collocation_solve(spec, 64), OffGridLagError);
  CollocationOptions opts;
  opts.interpolate_off_grid = true;
  EXPECT_NO_THROW(collocation_solve(spec, 64, opts));
}

TEST(Collocation, SingularSystem) {
  EXPECT_THROW(collocation_solve(make_problem(scalar(0.0), 4, 16), 16), SingularModeError);
}

TEST(Compare, SmoothCaseQuadruplesPerDoubling) {
  const std::vector<int> grids{64, 128, 256};
  for (const auto& [name, spec] : testing::smooth_suite()) {
    const OracleComparison cmp = compare_with_oracle(spec, grids);
    ASSERT_EQ(cmp.rows.size(), 3u);
    for (std::size_t i = 1; i < 3; ++i) EXPECT_NEAR(cmp.rows[i - 1].gap / cmp.rows[i].gap, 4.0, 0.8) << name;
    ASSERT_TRUE(cmp.order.has_value());
    EXPECT_GE(*cmp.order, 1.9) << name;
  }
}

TEST(Compare, ZeroForcingGivesZeroGaps) {
  ProblemSpec spec = testing::scalar_decay();
  spec.forcing = Forcing::zero(1);
  const std::vector<int> grids{64, 128};
  const OracleComparison cmp = compare_with_oracle(spec, grids);
  for (const auto& row : cmp.rows) EXPECT_EQ(row.gap, 0.0);
  EXPECT_FALSE(cmp.order.has_value());
}

// The oracle must not reach the resolvent or spectral solver, directly or
// through headers it includes.
TEST(Independence, OracleSourcesNeverIncludeResolventCode) {
  const std::filesystem::path root = NDSPEC_SOURCE_DIR;
  const std::regex include_re(R"re(#include\s+"([^"]+)")re");
  const std::set<std::string> forbidden{"ndspec/resolvent.hpp", "ndspec/spectral_solver.hpp", "ndspec/compare.hpp"};

  std::vector<std::filesystem::path> pending{root / "src/oracle/periodized_kernel.cpp",
                                             root / "src/oracle/collocation.cpp", root / "include/ndspec/oracle.hpp"};
  std::set<std::string> seen;
  while (!pending.empty()) {
    const std::filesystem::path file = pending.back();
    pending.pop_back();
    if (!seen.insert(file.string()).second) continue;
    std::ifstream in(file);
    ASSERT_TRUE(in) << file;
    std::stringstream text;
    text << in.rdbuf();
    const std::string body = text.str();
    for (std::sregex_iterator it(body.begin(), body.end(), include_re), end; it != end; ++it) {
      const std::string header = (*it)[1];
      EXPECT_FALSE(forbidden.contains(header)) << file << " includes " << header;
      if (std::filesystem::exists(root / "include" / header)) pending.push_back(root / "include" / header);
    }
  }
  EXPECT_GE(seen.size(), 5u);

  // The build graph agrees: the oracle library links the symbols layer only.
  std::ifstream cmake(root / "src/CMakeLists.txt");
  std::stringstream text;
  text << cmake.rdbuf();
  const std::regex link_re(R"(target_link_libraries\(ndspec_oracle([^)]*)\))");
  std::smatch match;
  const std::string body = text.str();
  ASSERT_TRUE(std::regex_search(body, match, link_re));
  EXPECT_EQ(match[1].str().find("resolvent"), std::string::npos);
  EXPECT_EQ(match[1].str().find("solver"), std::string::npos);
}

}  // namespace
}  // namespace ndspec
