#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ndspec/besov.hpp"
#include "ndspec/problem.hpp"

namespace ndspec::cli {

struct Tolerances {
  double singular_condition = 1e12;
  double residual = 1e-10;
  double kernel_tail = 1e-12;
  double lag_tolerance = 1e-9;
  bool interpolate_off_grid = false;
};

// Command-line values that take precedence over the config document.
struct Overrides {
  std::optional<int> truncation;
  std::optional<int> grid_size;
  std::optional<int> window;
  std::optional<std::uint64_t> seed;
};

struct RunConfig {
  ProblemSpec problem;
  int window = 512;
  BesovParams besov;
  std::vector<int> grid_list{64, 128, 256};
  std::vector<int> truncation_list{4, 8, 16, 32};
  std::uint64_t seed = 0;
  Tolerances tolerances;
  // The document with every default filled in, in a fixed key order.
  nlohmann::ordered_json resolved;
};

// Parses and validates a JSON config. Throws ConfigError listing every
// violation with the path of the offending field.
RunConfig parse_config(std::string_view text, const Overrides& overrides = {});

}  // namespace ndspec::cli
