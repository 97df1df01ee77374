#include "ndspec/cli/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace ndspec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  std::string text = fmt::format("{:.17g}", value);
  // Keep floats recognisable as floats when they happen to be integral.
  if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
  return text;
}

void write(const ordered_json& value, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string closing(static_cast<std::size_t>(2 * depth), ' ');
  switch (value.type()) {
    case ordered_json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += indent;
        out += ordered_json(key).dump();
        out += ": ";
        write(item, depth + 1, out);
      }
      out += "\n" + closing + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays ([re, im] pairs, vectors) stay on one line.
      const bool flat = value.size() <= 8 && std::all_of(value.begin(), value.end(), [](const ordered_json& v) {
                          return v.is_number() || v.is_null() || v.is_boolean();
                        });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i > 0) out += ", ";
          write(value[i], depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ",\n";
        out += indent;
        write(value[i], depth + 1, out);
      }
      out += "\n" + closing + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const ordered_json& value) {
  std::string out;
  write(value, 0, out);
  out += "\n";
  return out;
}

ordered_json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

ordered_json complex_number(cplx value) { return ordered_json::array({number(value.real()), number(value.imag())}); }

ordered_json to_json(const MBoundReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"name", row.name},
                    {"sup_norm", number(row.sup_norm)},
                    {"sup_scaled_diff", number(row.sup_scaled_diff)},
                    {"growth_exponent", number(row.growth_exponent)},
                    {"diff_growth_exponent", number(row.diff_growth_exponent)},
                    {"verdict", to_string(row.verdict)}});
  }
  return {{"window", report.window},
          {"rows", std::move(rows)},
          {"H1", report.h1},
          {"H2", report.h2},
          {"max_condition", number(report.max_condition)},
          {"implication_violated", report.implication_violated}};
}

ordered_json to_json(const FourierCoefficients& coefficients) {
  ordered_json modes = ordered_json::array();
  const int K = coefficients.bandwidth();
  for (int k = -K; k <= K; ++k) {
    const Vector v = coefficients.at(k);
    ordered_json value = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) value.push_back(complex_number(v(i)));
    modes.push_back({{"k", k}, {"value", std::move(value)}});
  }
  return {{"bandwidth", K}, {"modes", std::move(modes)}};
}

std::string grid_csv(const Matrix& samples, bool real) {
  std::string out = "t";
  for (Eigen::Index i = 0; i < samples.cols(); ++i) {
    out += real ? fmt::format(",u{}", i) : fmt::format(",u{}_re,u{}_im", i, i);
  }
  out += "\n";
  const int N = static_cast<int>(samples.rows());
  for (int j = 0; j < N; ++j) {
    out += fmt::format("{:.17g}", grid_node(j, N));
    for (Eigen::Index i = 0; i < samples.cols(); ++i) {
      const cplx z = samples(j, i);
      out += real ? fmt::format(",{:.17g}", z.real()) : fmt::format(",{:.17g},{:.17g}", z.real(), z.imag());
    }
    out += "\n";
  }
  return out;
}

}  // namespace ndspec::cli
