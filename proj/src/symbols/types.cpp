#include "ndspec/errors.hpp"
#include "ndspec/types.hpp"

namespace ndspec {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.size() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

bool is_real(const Matrix& m) { return (m.imag().array() == 0.0).all(); }

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string text = "invalid configuration:";
  for (const auto& v : violations) text += "\n  " + v.path + ": " + v.message;
  return text;
}

}  // namespace

ConfigError::ConfigError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace ndspec
