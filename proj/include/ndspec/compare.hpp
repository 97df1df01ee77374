#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ndspec/oracle.hpp"

namespace ndspec {

struct OracleGapRow {
  int grid_size = 0;
  double gap = 0.0;  // max_j || x_j - u(t_j) ||
};

struct OracleComparison {
  std::vector<OracleGapRow> rows;
  // -slope of log(gap) against log(N); empty when some gap is exactly zero.
  std::optional<double> order;
};

// Spectral solution (on the spec's truncation) against the collocation oracle
// on each grid in `grid_sizes`.
OracleComparison compare_with_oracle(const ProblemSpec& spec, std::span<const int> grid_sizes,
                                     const CollocationOptions& options = {});

}  // namespace ndspec
