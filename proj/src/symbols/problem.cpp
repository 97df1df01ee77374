#include "ndspec/problem.hpp"

#include <string>

#include "ndspec/errors.hpp"

namespace ndspec {

TrigPolynomial& TrigPolynomial::add_mode(int k, const Vector& value) {
  if (value.size() != dim_) throw DimensionError("trig polynomial: mode has wrong dimension");
  auto [it, inserted] = modes_.try_emplace(k, Vector::Zero(dim_));
  it->second += value;
  return *this;
}

TrigPolynomial& TrigPolynomial::add_cos(int harmonic, const Vector& value) {
  if (harmonic == 0) return add_mode(0, value);
  add_mode(harmonic, 0.5 * value);
  return add_mode(-harmonic, 0.5 * value);
}

TrigPolynomial& TrigPolynomial::add_sin(int harmonic, const Vector& value) {
  if (harmonic == 0) return *this;
  const Vector half = value / (2.0 * kI);
  add_mode(harmonic, half);
  return add_mode(-harmonic, -half);
}

int TrigPolynomial::bandwidth() const {
  int band = 0;
  for (const auto& [k, v] : modes_) {
    if (v.cwiseAbs().maxCoeff() > 0.0) band = std::max(band, std::abs(k));
  }
  return band;
}

Vector TrigPolynomial::operator()(double t) const {
  Vector value = Vector::Zero(dim_);
  for (const auto& [k, v] : modes_) value += std::polar(1.0, k * t) * v;
  return value;
}

bool TrigPolynomial::is_real() const {
  for (const auto& [k, v] : modes_) {
    auto mirror = modes_.find(-k);
    const Vector other = mirror == modes_.end() ? Vector::Zero(dim_) : mirror->second;
    if ((v - other.conjugate()).cwiseAbs().maxCoeff() > 1e-15 * (1.0 + v.cwiseAbs().maxCoeff())) {
      return false;
    }
  }
  return true;
}

Forcing::Forcing(TrigPolynomial poly) : dim_(poly.dim()), real_(poly.is_real()), trig_(std::move(poly)) {}

Forcing Forcing::from_samples(Matrix samples) {
  Forcing f;
  f.trig_.reset();
  f.dim_ = samples.cols();
  f.real_ = ndspec::is_real(samples);
  f.samples_ = std::move(samples);
  return f;
}

Forcing Forcing::from_function(std::function<Vector(double)> fn, Eigen::Index dim, bool real) {
  Forcing f;
  f.trig_.reset();
  f.dim_ = dim;
  f.real_ = real;
  f.function_ = std::move(fn);
  return f;
}

Matrix Forcing::sample(int grid_size) const {
  if (samples_) {
    if (samples_->rows() != grid_size) {
      throw DimensionError("forcing: sampled on " + std::to_string(samples_->rows()) +
                           " nodes, requested " + std::to_string(grid_size));
    }
    return *samples_;
  }
  Matrix out(grid_size, dim_);
  for (int j = 0; j < grid_size; ++j) {
    const double t = grid_node(j, grid_size);
    out.row(j) = (trig_ ? (*trig_)(t) : function_(t)).transpose();
  }
  return out;
}

FourierCoefficients Forcing::coefficients(int bandwidth, int grid_size) const {
  if (trig_) {
    FourierCoefficients out(bandwidth, dim_);
    for (const auto& [k, v] : trig_->modes()) {
      if (out.contains(k)) out.set(k, v);
    }
    return out;
  }
  return analyze(sample(grid_size), bandwidth);
}

double Forcing::tail_energy(int bandwidth, int grid_size) const {
  double energy = 0.0;
  if (trig_) {
    for (const auto& [k, v] : trig_->modes()) {
      if (std::abs(k) > bandwidth) energy += v.squaredNorm();
    }
    return energy;
  }
  const int full = (grid_size - 1) / 2;
  if (full <= bandwidth) return 0.0;
  const auto all = analyze(sample(grid_size), full);
  for (int k = -full; k <= full; ++k) {
    if (std::abs(k) > bandwidth) energy += all.at(k).squaredNorm();
  }
  return energy;
}

void ProblemSpec::validate() const {
  const Eigen::Index n = A.rows();
  if (n <= 0 || A.cols() != n) throw DimensionError("problem: A must be a non-empty square matrix");
  if (L.dim() != n) throw DimensionError("problem: L has dimension " + std::to_string(L.dim()));
  if (G.dim() != n) throw DimensionError("problem: G has dimension " + std::to_string(G.dim()));
  if (forcing.dim() != n) throw DimensionError("problem: forcing has dimension " + std::to_string(forcing.dim()));
  if (truncation < 0) throw ParameterError("problem: truncation K must be non-negative");
  if (grid_size < 2 * truncation + 1) {
    throw AliasingError("problem: grid N = " + std::to_string(grid_size) + " violates N >= 2K+1 for K = " +
                        std::to_string(truncation));
  }
  if (const Matrix* s = forcing.fixed_samples(); s && s->rows() != grid_size) {
    throw DimensionError("problem: forcing samples do not match the grid size");
  }
}

bool ProblemSpec::is_real() const {
  return ndspec::is_real(A) && L.is_real() && G.is_real() && kernel.is_real() && forcing.is_real();
}

ProblemSpec make_problem(Matrix A, int truncation, int grid_size) {
  const Eigen::Index n = A.rows();
  return ProblemSpec{std::move(A), DelayFunctional(n), DelayFunctional(n), KernelSpec{},
                     Forcing::zero(n), truncation, grid_size};
}

}  // namespace ndspec
