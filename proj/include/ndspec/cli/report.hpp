#pragma once

#include <string>

#include <json.hpp>

#include "ndspec/grid.hpp"
#include "ndspec/resolvent.hpp"

namespace ndspec::cli {

// Pretty-printed JSON with a fixed key order, floats at 17 significant digits,
// non-finite numbers as null, LF line endings and a trailing newline.
std::string dump_json(const nlohmann::ordered_json& value);

// A double, or null when not finite.
nlohmann::ordered_json number(double value);

// [re, im]
nlohmann::ordered_json complex_number(cplx value);

nlohmann::ordered_json to_json(const MBoundReport& report);

// {"bandwidth": K, "modes": [{"k": k, "value": [[re, im], ...]}, ...]}
nlohmann::ordered_json to_json(const FourierCoefficients& coefficients);

// Header "t,u0,u1,..." (real) or "t,u0_re,u0_im,..." and one row per node.
std::string grid_csv(const Matrix& samples, bool real);

}  // namespace ndspec::cli
