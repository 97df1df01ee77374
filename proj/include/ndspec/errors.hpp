#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidKernelError : public Error {
 public:
  using Error::Error;
};

// Grid too coarse for the requested bandwidth (N < 2K+1).
class AliasingError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class OffGridLagError : public Error {
 public:
  using Error::Error;
};

// A modal matrix M(k) (or the oracle's collocation system) is numerically
// singular. The collocation system reports kNoMode.
class SingularModeError : public Error {
 public:
  static constexpr int kNoMode = INT_MIN;

  SingularModeError(int mode, double condition, const std::string& what)
      : Error(what), mode_(mode), condition_(condition) {}

  int mode() const noexcept { return mode_; }
  bool has_mode() const noexcept { return mode_ != kNoMode; }
  double condition() const noexcept { return condition_; }

 private:
  int mode_;
  double condition_;
};

struct Violation {
  std::string path;
  std::string message;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace ndspec
