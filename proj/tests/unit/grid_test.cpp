#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ndspec/errors.hpp"
#include "ndspec/grid.hpp"
#include "ndspec/problem.hpp"
#include "reference_values.hpp"
#include "regression_specs.hpp"

namespace ndspec {
namespace {

Matrix sample(const std::function<Vector(double)>& f, Eigen::Index dim, int N) {
  Matrix out(N, dim);
  for (int j = 0; j < N; ++j) out.row(j) = f(grid_node(j, N)).transpose();
  return out;
}

TEST(Analyze, SingleCharacter) {
  Vector v(2);
  v << cplx(1.0, -2.0), 0.5;
  const Matrix s = sample([&](double t) -> Vector { return std::exp(cplx(0.0, t)) * v; }, 2, 16);
  const FourierCoefficients c = analyze(s, 5);
  for (int k = -5; k <= 5; ++k) {
    const Vector expected = k == 1 ? v : Vector::Zero(2);
    EXPECT_LT((c.at(k) - expected).cwiseAbs().maxCoeff(), 1e-15) << k;
  }
}

TEST(Analyze, ConstantAndCosine) {
  const FourierCoefficients c = analyze(sample([](double) { return testing::scalar_vector(3.0); }, 1, 9), 4);
  EXPECT_LT(std::abs(c.at(0)(0) - 3.0), 1e-15);
  EXPECT_LT(c.resized(4).data().bottomRows(4).cwiseAbs().maxCoeff(), 1e-15);

  const FourierCoefficients cosine =
      analyze(sample([](double t) { return testing::scalar_vector(std::cos(t)); }, 1, 32), 8);
  for (int k = -8; k <= 8; ++k) {
    EXPECT_NEAR(std::abs(cosine.at(k)(0) - (std::abs(k) == 1 ? 0.5 : 0.0)), 0.0, 1e-15) << k;
  }
}

TEST(Analyze, RejectsCoarseGrid) {
  EXPECT_THROW(analyze(Matrix::Zero(16, 1), 8), AliasingError);
  EXPECT_NO_THROW(analyze(Matrix::Zero(17, 1), 8));
}

TEST(Synthesize, ConstantAndCosine) {
  FourierCoefficients c(2, 1);
  c.set(0, testing::scalar_vector(2.0));
  EXPECT_LT((synthesize(c, 8) - Matrix::Constant(8, 1, 2.0)).cwiseAbs().maxCoeff(), 1e-15);

  FourierCoefficients cosine(1, 1);
  cosine.set(1, testing::scalar_vector(0.5));
  cosine.set(-1, testing::scalar_vector(0.5));
  const Matrix s = synthesize(cosine, 12);
  for (int j = 0; j < 12; ++j) EXPECT_NEAR(s(j, 0).real(), std::cos(grid_node(j, 12)), 1e-15);
  EXPECT_LT(max_imag(s), 1e-15);
}

TEST(Synthesize, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FourierCoefficients c = testing::random_coefficients(rng, 8, 1 + trial % 3);
    const FourierCoefficients back = analyze(synthesize(c, 32), 8);
    EXPECT_LE((back.data() - c.data()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Synthesize, RejectsBandBeyondNyquist) {
  EXPECT_THROW(synthesize(FourierCoefficients(9, 1), 16), AliasingError);
}

TEST(FourierCoefficients, OutsideBandIsZero) {
  FourierCoefficients c(2, 3);
  EXPECT_TRUE(c.at(7).isZero(0.0));
  EXPECT_THROW(c.set(3, Vector::Zero(3)), ParameterError);
  EXPECT_THROW(c.set(1, Vector::Zero(2)), DimensionError);
}

TEST(PeriodicGridFunction, RequiresResolvingGrid) {
  EXPECT_THROW(PeriodicGridFunction::from_coefficients(FourierCoefficients(8, 1), 16), AliasingError);
  const auto f = PeriodicGridFunction::from_function(
      [](double t) { return testing::scalar_vector(std::sin(2.0 * t)); }, 1, 16, 4);
  EXPECT_NEAR(std::abs(f.coefficients().at(2)(0) - cplx(0.0, -0.5)), 0.0, 1e-15);
}

TEST(Forcing, TrigCoefficientsAreExact) {
  TrigPolynomial p(1);
  p.add_cos(1, testing::scalar_vector(1.0)).add_sin(3, testing::scalar_vector(2.0));
  const Forcing f(p);
  const FourierCoefficients c = f.coefficients(4, 16);
  EXPECT_EQ(c.at(1)(0), cplx(0.5, 0.0));
  EXPECT_EQ(c.at(3)(0), cplx(0.0, -1.0));
  EXPECT_EQ(c.at(-3)(0), cplx(0.0, 1.0));
  EXPECT_TRUE(f.is_real());
  EXPECT_EQ(f.tail_energy(3, 16), 0.0);
  EXPECT_GT(f.tail_energy(2, 16), 1.9);
}

TEST(Forcing, AnalyticForcingCoefficients) {
  const Forcing f = Forcing::from_function([](double t) { return testing::scalar_vector(1.0 / (2.0 - std::cos(t))); },
                                           1, true);
  const FourierCoefficients c = f.coefficients(8, 128);
  EXPECT_NEAR(c.at(0)(0).real(), reference::kAnalyticForcingMean, 1e-14);
  EXPECT_NEAR(c.at(3)(0).real(), reference::kAnalyticForcingThird, 1e-14);
}

}  // namespace
}  // namespace ndspec
